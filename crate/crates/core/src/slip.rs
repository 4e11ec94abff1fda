//! Left multipliers, LIP maps and local left multipliers as exact solution
//! spaces, the SLIP decision and the block form of LIP maps on triangular
//! algebras.
//!
//! A map `ψ: V -> W` is stored as a `dim W x dim V` matrix acting on column
//! vectors; vectorized, entry `(r, s)` sits at index `r * dim V + s`.

use std::ops::Range;

use crate::algebra::{check_cap, Algebra, AllVectors, PeirceSplit, ProjectivePoints, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Residue, SpanBuilder, Subspace};
use crate::module::RightModule;

/// A linear map given by its matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    /// Rebuilds a map from its row-major vectorization.
    pub fn from_vectorized(
        field: PrimeField,
        codomain_dim: usize,
        domain_dim: usize,
        data: &[Residue],
    ) -> Result<Self> {
        Ok(Self { matrix: Matrix::new(field, codomain_dim, domain_dim, data.to_vec())? })
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self { matrix: Matrix::identity(field, n) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }
    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }
    pub fn vectorized(&self) -> &[Residue] {
        self.matrix.data()
    }

    pub fn apply(&self, v: &[Residue]) -> Result<Vec<Residue>> {
        self.matrix.mul_vec(v)
    }

    /// Restriction to a block of coordinates: rows `rows`, columns `cols`.
    fn block(&self, rows: Range<usize>, cols: Range<usize>) -> LinearMap {
        let mut m = Matrix::zeros(self.matrix.field(), rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.matrix.get(r, c));
            }
        }
        LinearMap { matrix: m }
    }
}

/// A subspace of `Hom(V, W)` in vectorized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    domain_dim: usize,
    codomain_dim: usize,
    space: Subspace,
}

impl MapSpace {
    fn new(domain_dim: usize, codomain_dim: usize, space: Subspace) -> Self {
        debug_assert_eq!(space.ambient_dim(), domain_dim * codomain_dim);
        Self { domain_dim, codomain_dim, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }
    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<LinearMap> {
        self.space
            .basis_vectors()
            .map(|v| {
                LinearMap::from_vectorized(self.space.field(), self.codomain_dim, self.domain_dim, v).expect("shape")
            })
            .collect()
    }

    pub fn contains(&self, psi: &LinearMap) -> Result<bool> {
        if psi.domain_dim() != self.domain_dim || psi.codomain_dim() != self.codomain_dim {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim * self.codomain_dim,
                found: psi.domain_dim() * psi.codomain_dim(),
            });
        }
        self.space.contains(psi.vectorized())
    }

    pub fn is_subspace_of(&self, other: &MapSpace) -> Result<bool> {
        self.space.is_subspace_of(&other.space)
    }
}

/// Knobs for the constraint enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlipOptions {
    /// Upper bound on `p^dim` for the enumerated domain.
    pub cap: u64,
    /// Stop once the constraints pin the space down to the multipliers.
    pub early_stop: bool,
    /// Enumerate one point per line instead of every vector.
    pub projective: bool,
}

impl Default for SlipOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, early_stop: true, projective: true }
    }
}

/// Outcome of [`is_slip`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlipReport {
    pub multiplier_dim: usize,
    pub lip_dim: usize,
    pub is_slip: bool,
    /// A LIP map that is not a left multiplier, when one exists.
    pub witness: Option<LinearMap>,
    pub points_processed: u64,
    /// Whether enumeration ended before the last point.
    pub early_stop: bool,
}

/// A local-multiplier space together with enumeration statistics.
#[derive(Clone, Debug)]
pub struct LocalRun {
    pub space: MapSpace,
    pub points_processed: u64,
    pub early_stop: bool,
}

/// Basis action matrices `σ_{e_j}` of a right module, so that
/// `σ_v = Σ v_j σ_{e_j}`.
struct ActionFamily {
    field: PrimeField,
    m: usize,
    basis: Vec<Vec<Residue>>,
}

impl ActionFamily {
    fn of_module(x: &RightModule) -> Self {
        let b = x.base();
        let basis = (0..b.dim()).map(|j| x.action_matrix(&b.basis_vector(j)).into_data()).collect();
        Self { field: b.field(), m: x.dim(), basis }
    }

    fn of_algebra(a: &Algebra) -> Self {
        let basis = (0..a.dim()).map(|j| a.right_mul_matrix(&a.basis_vector(j)).into_data()).collect();
        Self { field: a.field(), m: a.dim(), basis }
    }

    fn at(&self, v: &[Residue]) -> Matrix {
        let mut data = vec![0; self.m * self.m];
        for (j, &vj) in v.iter().enumerate() {
            if vj != 0 {
                self.field.axpy(&mut data, vj, &self.basis[j]);
            }
        }
        Matrix::new(self.field, self.m, self.m, data).expect("square")
    }
}

fn points(field: PrimeField, n: usize, projective: bool) -> Box<dyn Iterator<Item = Vec<Residue>>> {
    if projective {
        Box::new(ProjectivePoints::new(field, n))
    } else {
        Box::new(AllVectors::new(field, n))
    }
}

/// `{ψ : V -> X : ψ(v) ∈ X v for all v}`: for each point `v` and each row
/// `c` of the left nullspace of `σ_v`, require `c Ψ v = 0`.
fn local_space(family: &ActionFamily, domain_dim: usize, opts: SlipOptions) -> Result<LocalRun> {
    let f = family.field;
    check_cap(f, domain_dim, opts.cap)?;
    let m = family.m;
    let unknowns = m * domain_dim;
    // Multipliers always satisfy the constraints and form an m-dimensional
    // space, so the constraint rank cannot exceed unknowns - m.
    let ceiling = unknowns - m;
    let mut constraints = SpanBuilder::new(f, unknowns);
    let mut processed = 0u64;
    let mut stopped = false;
    let total = if opts.projective { ProjectivePoints::count(f, domain_dim) } else { f.power_count(domain_dim) }
        .unwrap_or(u64::MAX);
    for v in points(f, domain_dim, opts.projective) {
        processed += 1;
        let sigma = family.at(&v);
        for c in sigma.left_nullspace().basis_vectors() {
            constraints.add_outer(c, &v)?;
        }
        if opts.early_stop && constraints.rank() == ceiling && processed < total {
            stopped = true;
            break;
        }
    }
    let space = constraints.to_subspace().annihilator();
    Ok(LocalRun { space: MapSpace::new(domain_dim, m, space), points_processed: processed, early_stop: stopped })
}

/// The algebra of left multipliers `{L_x}` in vectorized form.
pub fn left_multiplier_space(a: &Algebra) -> MapSpace {
    let d = a.dim();
    let gens: Vec<Vec<Residue>> = (0..d).map(|i| a.left_mul_matrix(&a.basis_vector(i)).into_data()).collect();
    MapSpace::new(d, d, Subspace::from_spanning(a.field(), d * d, &gens).expect("shape"))
}

/// All LIP maps `A -> A`.
pub fn lip_space(a: &Algebra, opts: SlipOptions) -> Result<LocalRun> {
    local_space(&ActionFamily::of_algebra(a), a.dim(), opts)
}

/// Left multipliers `B -> X`, that is the maps `b -> x_0 b`.
pub fn module_multiplier_space(x: &RightModule) -> MapSpace {
    let b = x.base();
    let (d, m) = (b.dim(), x.dim());
    let gens: Vec<Vec<Residue>> = (0..m)
        .map(|i| {
            let mut f0 = vec![0; m];
            f0[i] = 1;
            let mut data = vec![0; m * d];
            for s in 0..d {
                let img = x.act(&f0, &b.basis_vector(s)).expect("shape");
                for (r, &val) in img.iter().enumerate() {
                    data[r * d + s] = val;
                }
            }
            data
        })
        .collect();
    MapSpace::new(d, m, Subspace::from_spanning(b.field(), m * d, &gens).expect("shape"))
}

/// Local left multipliers `B -> X`.
pub fn local_left_multiplier_space(x: &RightModule, opts: SlipOptions) -> Result<LocalRun> {
    local_space(&ActionFamily::of_module(x), x.base().dim(), opts)
}

/// Whether every local left multiplier `B -> X` is a left multiplier.
pub fn local_equals_multiplier(x: &RightModule, opts: SlipOptions) -> Result<bool> {
    if x.dim() == 0 {
        return Ok(true);
    }
    let local = local_left_multiplier_space(x, opts)?;
    Ok(local.space.dim() == module_multiplier_space(x).dim())
}

/// Decides whether every LIP map on `a` is a left multiplier.
pub fn is_slip(a: &Algebra, opts: SlipOptions) -> Result<SlipReport> {
    if a.dim() == 1 {
        // every linear map on a line is multiplication by its value at 1
        return Ok(SlipReport {
            multiplier_dim: 1,
            lip_dim: 1,
            is_slip: true,
            witness: None,
            points_processed: 0,
            early_stop: false,
        });
    }
    let run = lip_space(a, opts)?;
    let mult = left_multiplier_space(a);
    let lip = run.space;
    let is_slip = lip.dim() == mult.dim();
    let witness = if is_slip { None } else { Some(extract_witness(a, &mult, &lip, opts.cap)?) };
    Ok(SlipReport {
        multiplier_dim: mult.dim(),
        lip_dim: lip.dim(),
        is_slip,
        witness,
        points_processed: run.points_processed,
        early_stop: run.early_stop,
    })
}

/// First LIP basis map, in canonical order, that is independent of the
/// multipliers. Re-checked directly before being returned.
fn extract_witness(a: &Algebra, mult: &MapSpace, lip: &MapSpace, cap: u64) -> Result<LinearMap> {
    let mut sb = SpanBuilder::from_subspace(mult.space());
    for psi in lip.basis() {
        if sb.add_vector(psi.vectorized())? {
            if !is_lip(a, &psi, cap)? {
                return Err(Error::WitnessRejected("not LIP"));
            }
            if is_left_multiplier(a, &psi)? {
                return Err(Error::WitnessRejected("is a left multiplier"));
            }
            return Ok(psi);
        }
    }
    Err(Error::WitnessRejected("no LIP map outside the multipliers"))
}

fn check_endo(a: &Algebra, psi: &LinearMap) -> Result<()> {
    if psi.domain_dim() != a.dim() || psi.codomain_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: psi.domain_dim() });
    }
    if psi.matrix().field() != a.field() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `ψ = L_{ψ(1)}`.
pub fn is_left_multiplier(a: &Algebra, psi: &LinearMap) -> Result<bool> {
    check_endo(a, psi)?;
    let g = psi.apply(a.unit())?;
    Ok(&a.left_mul_matrix(&g) == psi.matrix())
}

/// `ψ(v) ∈ A v` for every point `v`, checked directly.
pub fn is_lip(a: &Algebra, psi: &LinearMap, cap: u64) -> Result<bool> {
    check_endo(a, psi)?;
    check_cap(a.field(), a.dim(), cap)?;
    for v in ProjectivePoints::new(a.field(), a.dim()) {
        if !a.principal_left_ideal(&v).contains(&psi.apply(&v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The literal definition: `ψ(J) ⊆ J` for every left ideal `J`, found by
/// enumerating every subspace. `cap` bounds the subspace count.
pub fn lip_check_full(a: &Algebra, psi: &LinearMap, cap: u64) -> Result<bool> {
    check_endo(a, psi)?;
    for j in a.enumerate_left_ideals(cap)? {
        if !j.image_under(psi.matrix())?.is_subspace_of(&j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The space `{ψ : ψ(J) ⊆ J for every left ideal J}` built from the full
/// left-ideal lattice.
pub fn lattice_lip_space(a: &Algebra, cap: u64) -> Result<MapSpace> {
    let d = a.dim();
    let mut constraints = SpanBuilder::new(a.field(), d * d);
    for j in a.enumerate_left_ideals(cap)? {
        let perp = j.annihilator();
        for u in j.basis_vectors() {
            for w in perp.basis_vectors() {
                constraints.add_outer(w, u)?;
            }
        }
    }
    Ok(MapSpace::new(d, d, constraints.to_subspace().annihilator()))
}

/// The pieces of a LIP map on a triangular algebra and the outcome of each
/// check on them.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub alpha: LinearMap,
    pub tau: LinearMap,
    pub beta1: LinearMap,
    pub beta2: LinearMap,
    /// `τ(a m) = α(a) m` on basis pairs.
    pub tau_compatible: bool,
    pub alpha_lip: bool,
    pub beta2_lip: bool,
    /// `β₁` is a local left multiplier `B' -> M'`.
    pub beta1_local: bool,
}

impl Decomposition {
    pub fn all_passed(&self) -> bool {
        self.tau_compatible && self.alpha_lip && self.beta2_lip && self.beta1_local
    }
}

/// Precomputed data for decomposing many LIP maps on one triangular
/// algebra: the Peirce split at `e`, the change of basis and the LIP and
/// local-multiplier spaces the pieces are checked against.
pub struct TriangularDecomposer {
    split: PeirceSplit,
    p: Matrix,
    p_inv: Matrix,
    lip: MapSpace,
    corner_lip: MapSpace,
    co_corner_lip: MapSpace,
    local: Option<MapSpace>,
}

impl TriangularDecomposer {
    pub fn new(t: &Algebra, e: &[Residue], opts: SlipOptions) -> Result<Self> {
        let split = t.peirce_split(e)?;
        let p = split.change_of_basis();
        let p_inv = p.inverse().expect("Peirce pieces form a basis");
        let lip = lip_space(t, opts)?.space;
        let corner_lip = lip_space(&split.corner.algebra, opts)?.space;
        let co_corner_lip = lip_space(&split.co_corner.algebra, opts)?.space;
        let local = if split.bimodule.dim() == 0 {
            None
        } else {
            Some(local_left_multiplier_space(&split.bimodule.as_right_module(), opts)?.space)
        };
        Ok(Self { split, p, p_inv, lip, corner_lip, co_corner_lip, local })
    }

    pub fn split(&self) -> &PeirceSplit {
        &self.split
    }

    /// Writes `psi` in Peirce coordinates and extracts `α: A' -> A'`,
    /// `τ: M' -> M'`, `β₁: B' -> M'` and `β₂: B' -> B'`. Entries outside the
    /// expected block pattern are reported as
    /// [`Error::BlockStructureViolated`].
    pub fn decompose(&self, psi: &LinearMap) -> Result<Decomposition> {
        if !self.lip.contains(psi)? {
            return Err(Error::NotLip);
        }
        let q = LinearMap::new(self.p_inv.mul(psi.matrix())?.mul(&self.p)?);
        let (ka, km, kb) = self.split.dims();
        let (ra, rm, rb) = (0..ka, ka..ka + km, ka + km..ka + km + kb);

        let zero_block = |rows: Range<usize>, cols: Range<usize>| q.block(rows, cols).matrix().is_zero();
        if !zero_block(rm.clone(), ra.clone()) || !zero_block(rb.clone(), ra.clone()) {
            return Err(Error::BlockStructureViolated { block: "corner image leaves A'" });
        }
        if !zero_block(ra.clone(), rm.clone()) || !zero_block(rb.clone(), rm.clone()) {
            return Err(Error::BlockStructureViolated { block: "bimodule image leaves M'" });
        }
        if !zero_block(ra.clone(), rb.clone()) {
            return Err(Error::BlockStructureViolated { block: "co-corner image meets A'" });
        }
        let alpha = q.block(ra.clone(), ra.clone());
        let tau = q.block(rm.clone(), rm.clone());
        let beta1 = q.block(rm.clone(), rb.clone());
        let beta2 = q.block(rb.clone(), rb.clone());

        let bimod = &self.split.bimodule;
        let a_alg = &self.split.corner.algebra;
        let mut tau_compatible = true;
        'outer: for i in 0..ka {
            let a = a_alg.basis_vector(i);
            let alpha_a = alpha.apply(&a)?;
            for j in 0..km {
                let mut m = vec![0; km];
                m[j] = 1;
                if tau.apply(&bimod.act_left(&a, &m))? != bimod.act_left(&alpha_a, &m) {
                    tau_compatible = false;
                    break 'outer;
                }
            }
        }
        let alpha_lip = self.corner_lip.contains(&alpha)?;
        let beta2_lip = self.co_corner_lip.contains(&beta2)?;
        let beta1_local = match &self.local {
            Some(space) => space.contains(&beta1)?,
            None => true,
        };
        Ok(Decomposition { alpha, tau, beta1, beta2, tau_compatible, alpha_lip, beta2_lip, beta1_local })
    }
}

/// One-shot form of [`TriangularDecomposer::decompose`]; `psi` is first
/// checked to be LIP pointwise.
pub fn decompose_lip_triangular(
    t: &Algebra,
    e: &[Residue],
    psi: &LinearMap,
    opts: SlipOptions,
) -> Result<Decomposition> {
    if !is_lip(t, psi, opts.cap)? {
        return Err(Error::NotLip);
    }
    TriangularDecomposer::new(t, e, opts)?.decompose(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        matn, matrix_bimodule, scalar_field, scalar_right_bimodule, tn, triangular, u_dual_numbers,
    };

    fn opts() -> SlipOptions {
        SlipOptions::default()
    }

    fn gf2() -> Algebra {
        scalar_field(2).unwrap()
    }

    #[test]
    fn multiplier_dims() {
        assert_eq!(left_multiplier_space(&gf2()).dim(), 1);
        assert_eq!(left_multiplier_space(&u_dual_numbers(2).unwrap()).dim(), 2);
        assert_eq!(left_multiplier_space(&matn(&gf2(), 2).unwrap()).dim(), 4);
    }

    /// Brute force over all 16 maps GF(2)^2 -> GF(2)^2: LIP means
    /// `ψ(v) ∈ {x v : x ∈ U}` for all 4 vectors.
    #[test]
    fn u2_lip_space_matches_brute_force() {
        let u = u_dual_numbers(2).unwrap();
        let f = u.field();
        let elems: Vec<Vec<u32>> = AllVectors::new(f, 2).collect();
        let brute: Vec<Vec<u32>> = AllVectors::new(f, 4)
            .filter(|data| {
                let psi = LinearMap::from_vectorized(f, 2, 2, data).unwrap();
                elems.iter().all(|v| {
                    let img = psi.apply(v).unwrap();
                    elems.iter().any(|x| u.mul(x, v) == img)
                })
            })
            .collect();
        assert_eq!(brute.len(), 8);
        let run = lip_space(&u, opts()).unwrap();
        assert_eq!(run.space.dim(), 3);
        assert_eq!(run.space.space(), &Subspace::from_spanning(f, 4, &brute).unwrap());
    }

    #[test]
    fn slip_decisions() {
        let u = u_dual_numbers(2).unwrap();
        let r = is_slip(&u, opts()).unwrap();
        assert!(!r.is_slip);
        assert_eq!((r.lip_dim, r.multiplier_dim), (3, 2));
        let w = r.witness.unwrap();
        assert!(lip_check_full(&u, &w, 1000).unwrap());
        assert!(!is_left_multiplier(&u, &w).unwrap());

        let m2 = matn(&gf2(), 2).unwrap();
        let r = is_slip(&m2, opts()).unwrap();
        assert!(r.is_slip && r.witness.is_none());
        assert_eq!(r.lip_dim, 4);
        assert!(is_slip(&tn(&gf2(), 2).unwrap(), opts()).unwrap().is_slip);
        assert!(is_slip(&gf2(), opts()).unwrap().is_slip);
    }

    #[test]
    fn example_witness_is_lip() {
        // ψ(1) = 0, ψ(x) = x
        let u = u_dual_numbers(2).unwrap();
        let psi = LinearMap::from_vectorized(u.field(), 2, 2, &[0, 0, 0, 1]).unwrap();
        assert!(is_lip(&u, &psi, 16).unwrap());
        assert!(lip_check_full(&u, &psi, 16).unwrap());
        assert!(!is_left_multiplier(&u, &psi).unwrap());
        let swap = LinearMap::from_vectorized(u.field(), 2, 2, &[0, 1, 1, 0]).unwrap();
        assert!(!lip_check_full(&u, &swap, 16).unwrap());
        assert!(!is_lip(&u, &swap, 16).unwrap());
        assert!(lip_check_full(&u, &LinearMap::identity(u.field(), 2), 16).unwrap());
    }

    #[test]
    fn projective_and_full_enumeration_agree() {
        for a in [u_dual_numbers(3).unwrap(), tn(&gf2(), 2).unwrap(), matn(&gf2(), 2).unwrap()] {
            let proj = lip_space(&a, SlipOptions { early_stop: false, ..opts() }).unwrap();
            let full = lip_space(&a, SlipOptions { early_stop: false, projective: false, ..opts() }).unwrap();
            assert_eq!(proj.space, full.space);
            let early = lip_space(&a, opts()).unwrap();
            assert_eq!(proj.space, early.space);
            assert_eq!(lattice_lip_space(&a, 1 << 16).unwrap(), proj.space);
        }
    }

    #[test]
    fn local_multipliers() {
        let plane = matrix_bimodule(&gf2(), 2, 1).unwrap().as_right_module();
        assert_eq!(local_left_multiplier_space(&plane, opts()).unwrap().space.dim(), 2);
        assert!(local_equals_multiplier(&plane, opts()).unwrap());

        let u = u_dual_numbers(2).unwrap();
        let reg = RightModule::regular(&u);
        assert_eq!(local_left_multiplier_space(&reg, opts()).unwrap().space.dim(), 3);
        assert!(!local_equals_multiplier(&reg, opts()).unwrap());

        let rows = matrix_bimodule(&gf2(), 1, 2).unwrap().as_right_module();
        assert!(local_equals_multiplier(&rows, opts()).unwrap());
    }

    #[test]
    fn decomposition_of_multipliers_and_lip_maps() {
        let t2 = tn(&gf2(), 2).unwrap();
        let e = vec![1, 0, 0];
        for g in AllVectors::new(t2.field(), 3) {
            let psi = LinearMap::new(t2.left_mul_matrix(&g));
            let dec = decompose_lip_triangular(&t2, &e, &psi, opts()).unwrap();
            assert!(dec.all_passed());
        }
        // ψ(E11) = E22
        let mut m = Matrix::zeros(t2.field(), 3, 3);
        m.set(2, 0, 1);
        assert_eq!(decompose_lip_triangular(&t2, &e, &LinearMap::new(m), opts()).unwrap_err(), Error::NotLip);

        let u = u_dual_numbers(2).unwrap();
        let (t, e) = triangular(&u, &scalar_right_bimodule(&u).unwrap(), &gf2()).unwrap();
        for psi in lip_space(&t, opts()).unwrap().space.basis() {
            assert!(decompose_lip_triangular(&t, &e, &psi, opts()).unwrap().all_passed());
        }
    }
}
