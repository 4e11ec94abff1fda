//! Right modules and bimodules over structure-constant algebras.
//!
//! A module of dimension `m` has basis `f_0, ..., f_{m-1}`. Right actions are
//! stored as `r[i][j][k]` with `f_i e_j = sum_k r[i][j][k] f_k`, left actions
//! as `l[i][j][k]` with `a_i f_j = sum_k l[i][j][k] f_k`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Residue, SpanBuilder, Subspace};

/// A unital right module over `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    base: Algebra,
    mdim: usize,
    raction: Vec<Residue>,
}

/// A unital `(left, right)`-bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Algebra,
    right: Algebra,
    mdim: usize,
    laction: Vec<Residue>,
    raction: Vec<Residue>,
}

fn check_len(len: usize, expected: usize) -> Result<()> {
    if len != expected {
        return Err(Error::DimensionMismatch { expected, found: len });
    }
    Ok(())
}

/// Coordinates of `f_i * b` for the action tensor `r` of a right module.
fn right_act(base: &Algebra, mdim: usize, r: &[Residue], f: &[Residue], b: &[Residue]) -> Vec<Residue> {
    let fld = base.field();
    let d = base.dim();
    let mut out = vec![0; mdim];
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let start = (i * d + j) * mdim;
            fld.axpy(&mut out, fld.mul(fi, bj), &r[start..start + mdim]);
        }
    }
    out
}

fn left_act(alg: &Algebra, mdim: usize, l: &[Residue], a: &[Residue], f: &[Residue]) -> Vec<Residue> {
    let fld = alg.field();
    let mut out = vec![0; mdim];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &fj) in f.iter().enumerate() {
            if fj == 0 {
                continue;
            }
            let start = (i * mdim + j) * mdim;
            fld.axpy(&mut out, fld.mul(ai, fj), &l[start..start + mdim]);
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Residue> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn validate_right(base: &Algebra, mdim: usize, r: &[Residue]) -> Result<()> {
    for i in 0..mdim {
        let f = unit(mdim, i);
        if right_act(base, mdim, r, &f, base.unit()) != f {
            return Err(Error::UnitActionViolated { side: "right", index: i });
        }
    }
    for i in 0..mdim {
        let f = unit(mdim, i);
        for j in 0..base.dim() {
            let fj = right_act(base, mdim, r, &f, &base.basis_vector(j));
            for k in 0..base.dim() {
                let lhs = right_act(base, mdim, r, &fj, &base.basis_vector(k));
                let rhs = right_act(base, mdim, r, &f, base.basis_product(j, k));
                if lhs != rhs {
                    return Err(Error::ModuleAxiomViolated { side: "right", i, j, k });
                }
            }
        }
    }
    Ok(())
}

fn validate_left(alg: &Algebra, mdim: usize, l: &[Residue]) -> Result<()> {
    for j in 0..mdim {
        let f = unit(mdim, j);
        if left_act(alg, mdim, l, alg.unit(), &f) != f {
            return Err(Error::UnitActionViolated { side: "left", index: j });
        }
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            for k in 0..mdim {
                let f = unit(mdim, k);
                let jf = left_act(alg, mdim, l, &alg.basis_vector(j), &f);
                let lhs = left_act(alg, mdim, l, &alg.basis_vector(i), &jf);
                let rhs = left_act(alg, mdim, l, alg.basis_product(i, j), &f);
                if lhs != rhs {
                    return Err(Error::ModuleAxiomViolated { side: "left", i, j, k });
                }
            }
        }
    }
    Ok(())
}

impl RightModule {
    pub fn new(base: Algebra, mdim: usize, raction: Vec<Residue>) -> Result<Self> {
        let m = Self::from_parts_unchecked(base, mdim, raction)?;
        m.validate()?;
        Ok(m)
    }

    pub fn from_parts_unchecked(base: Algebra, mdim: usize, raction: Vec<Residue>) -> Result<Self> {
        check_len(raction.len(), mdim * base.dim() * mdim)?;
        for &x in &raction {
            base.field().check(x as u64)?;
        }
        Ok(Self { base, mdim, raction })
    }

    /// Builds a module from `f_i e_j` given on basis indices.
    pub fn from_action(base: Algebra, mdim: usize, mut act: impl FnMut(usize, usize) -> Vec<Residue>) -> Result<Self> {
        let mut raction = Vec::with_capacity(mdim * base.dim() * mdim);
        for i in 0..mdim {
            for j in 0..base.dim() {
                raction.extend(act(i, j));
            }
        }
        Self::new(base, mdim, raction)
    }

    /// `B` as a right module over itself.
    pub fn regular(base: &Algebra) -> Self {
        Self { base: base.clone(), mdim: base.dim(), raction: base.structure().to_vec() }
    }

    pub fn validate(&self) -> Result<()> {
        validate_right(&self.base, self.mdim, &self.raction)
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }
    pub fn dim(&self) -> usize {
        self.mdim
    }
    pub fn raction(&self) -> &[Residue] {
        &self.raction
    }

    /// `f * b`.
    pub fn act(&self, f: &[Residue], b: &[Residue]) -> Result<Vec<Residue>> {
        if f.len() != self.mdim {
            return Err(Error::DimensionMismatch { expected: self.mdim, found: f.len() });
        }
        if b.len() != self.base.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(right_act(&self.base, self.mdim, &self.raction, f, b))
    }

    /// Matrix of `m -> m b`.
    pub fn action_matrix(&self, b: &[Residue]) -> Matrix {
        let m = self.mdim;
        let mut out = Matrix::zeros(self.base.field(), m, m);
        for i in 0..m {
            let col = right_act(&self.base, m, &self.raction, &unit(m, i), b);
            for (k, &x) in col.iter().enumerate() {
                out.set(k, i, x);
            }
        }
        out
    }

    /// `X b`, the column space of the action matrix.
    pub fn principal_image(&self, b: &[Residue]) -> Result<Subspace> {
        if b.len() != self.base.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.action_matrix(b).column_space())
    }

    /// `End_B(X)`: matrices commuting with every action matrix, made into an
    /// algebra under composition, and `X` as an `(End_B(X), B)`-bimodule
    /// with `φ · m = φ(m)`.
    pub fn endomorphism_algebra(&self) -> Result<Endomorphisms> {
        let f = self.base.field();
        let m = self.mdim;
        if m == 0 {
            return Err(Error::EmptyAlgebra);
        }
        // Unknown Φ vectorized row-major; one block of m^2 equations per
        // basis action matrix σ: Φσ - σΦ = 0.
        let mut rows: Vec<Vec<Residue>> = Vec::new();
        for j in 0..self.base.dim() {
            let sigma = self.action_matrix(&self.base.basis_vector(j));
            for r in 0..m {
                for c in 0..m {
                    let mut eq = vec![0; m * m];
                    // (Φσ)[r][c] = Σ_t Φ[r][t] σ[t][c]
                    for t in 0..m {
                        eq[r * m + t] = f.add(eq[r * m + t], sigma.get(t, c));
                    }
                    // (σΦ)[r][c] = Σ_t σ[r][t] Φ[t][c]
                    for t in 0..m {
                        eq[t * m + c] = f.sub(eq[t * m + c], sigma.get(r, t));
                    }
                    rows.push(eq);
                }
            }
        }
        let commutant =
            if rows.is_empty() { Subspace::full(f, m * m) } else { Matrix::from_rows(f, m * m, &rows)?.nullspace() };
        let basis: Vec<Matrix> =
            commutant.basis_vectors().map(|v| Matrix::new(f, m, m, v.to_vec())).collect::<Result<_>>()?;
        let k = basis.len();
        let identity = Matrix::identity(f, m);
        let one = commutant.coordinates(identity.data())?.expect("identity commutes");
        let algebra = Algebra::from_basis_products(f, k, one, |s, t| {
            let prod = basis[s].mul(&basis[t]).expect("square");
            commutant.coordinates(prod.data()).expect("shape").expect("commutant is closed")
        })?;
        let bimodule = Bimodule::from_actions(
            algebra.clone(),
            self.base.clone(),
            m,
            |i, j| basis[i].column(j),
            |i, j| right_act(&self.base, m, &self.raction, &unit(m, i), &self.base.basis_vector(j)),
        )?;
        assert_eq!(bimodule.left_annihilator().dim(), 0, "End_B(X) acts faithfully");
        Ok(Endomorphisms { algebra, bimodule, basis })
    }
}

/// Result of [`RightModule::endomorphism_algebra`].
#[derive(Clone, Debug)]
pub struct Endomorphisms {
    pub algebra: Algebra,
    pub bimodule: Bimodule,
    /// The commuting matrices, in the order of the algebra's basis.
    pub basis: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: Algebra,
        right: Algebra,
        mdim: usize,
        laction: Vec<Residue>,
        raction: Vec<Residue>,
    ) -> Result<Self> {
        let b = Self::from_parts_unchecked(left, right, mdim, laction, raction)?;
        b.validate()?;
        Ok(b)
    }

    pub fn from_parts_unchecked(
        left: Algebra,
        right: Algebra,
        mdim: usize,
        laction: Vec<Residue>,
        raction: Vec<Residue>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::AlgebraMismatch);
        }
        check_len(laction.len(), left.dim() * mdim * mdim)?;
        check_len(raction.len(), mdim * right.dim() * mdim)?;
        for &x in laction.iter().chain(&raction) {
            left.field().check(x as u64)?;
        }
        Ok(Self { left, right, mdim, laction, raction })
    }

    /// Builds a bimodule from `a_i f_j` and `f_i b_j` given on basis indices.
    pub fn from_actions(
        left: Algebra,
        right: Algebra,
        mdim: usize,
        mut lact: impl FnMut(usize, usize) -> Vec<Residue>,
        mut ract: impl FnMut(usize, usize) -> Vec<Residue>,
    ) -> Result<Self> {
        let mut laction = Vec::with_capacity(left.dim() * mdim * mdim);
        for i in 0..left.dim() {
            for j in 0..mdim {
                laction.extend(lact(i, j));
            }
        }
        let mut raction = Vec::with_capacity(mdim * right.dim() * mdim);
        for i in 0..mdim {
            for j in 0..right.dim() {
                raction.extend(ract(i, j));
            }
        }
        Self::new(left, right, mdim, laction, raction)
    }

    /// Checks both unit actions, both associativity laws and
    /// `(a m) b = a (m b)` on all basis triples.
    pub fn validate(&self) -> Result<()> {
        validate_left(&self.left, self.mdim, &self.laction)?;
        validate_right(&self.right, self.mdim, &self.raction)?;
        let m = self.mdim;
        for i in 0..self.left.dim() {
            for j in 0..m {
                let am = left_act(&self.left, m, &self.laction, &self.left.basis_vector(i), &unit(m, j));
                for k in 0..self.right.dim() {
                    let b = self.right.basis_vector(k);
                    let lhs = right_act(&self.right, m, &self.raction, &am, &b);
                    let mb = right_act(&self.right, m, &self.raction, &unit(m, j), &b);
                    let rhs = left_act(&self.left, m, &self.laction, &self.left.basis_vector(i), &mb);
                    if lhs != rhs {
                        return Err(Error::ModuleAxiomViolated { side: "bimodule", i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &Algebra {
        &self.left
    }
    pub fn right(&self) -> &Algebra {
        &self.right
    }
    pub fn dim(&self) -> usize {
        self.mdim
    }
    pub fn laction(&self) -> &[Residue] {
        &self.laction
    }
    pub fn raction(&self) -> &[Residue] {
        &self.raction
    }

    /// `a m`.
    pub fn act_left(&self, a: &[Residue], m: &[Residue]) -> Vec<Residue> {
        left_act(&self.left, self.mdim, &self.laction, a, m)
    }

    /// `m b`.
    pub fn act_right(&self, m: &[Residue], b: &[Residue]) -> Vec<Residue> {
        right_act(&self.right, self.mdim, &self.raction, m, b)
    }

    /// Forgets the left structure.
    pub fn as_right_module(&self) -> RightModule {
        RightModule { base: self.right.clone(), mdim: self.mdim, raction: self.raction.clone() }
    }

    /// `l.ann(M) = {a : a M = 0}`, the nullspace of the stacked maps
    /// `a -> a f_j`.
    pub fn left_annihilator(&self) -> Subspace {
        let f = self.left.field();
        let d = self.left.dim();
        let m = self.mdim;
        if m == 0 {
            return Subspace::full(f, d);
        }
        let mut sys = Matrix::zeros(f, m * m, d);
        for i in 0..d {
            for j in 0..m {
                for k in 0..m {
                    sys.set(j * m + k, i, self.laction[(i * m + j) * m + k]);
                }
            }
        }
        sys.nullspace()
    }
}

/// Checks that a subspace of `A` is closed under left multiplication by `A`.
pub fn is_left_ideal_of(a: &Algebra, s: &Subspace) -> bool {
    a.is_left_ideal(s).unwrap_or(false)
}

/// Span of `{a m : a in A}` for a fixed `m`.
pub fn cyclic_left_submodule(b: &Bimodule, m: &[Residue]) -> Subspace {
    let mut sb = SpanBuilder::new(b.left.field(), b.mdim);
    for i in 0..b.left.dim() {
        sb.add_vector(&b.act_left(&b.left.basis_vector(i), m)).expect("dims");
    }
    sb.to_subspace()
}
