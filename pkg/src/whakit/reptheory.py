"""Representation category machinery and sector data.

Representations are stored as arrays of matrices over the algebra basis.  The
monoidal product compresses ``(D1 (x) D2) o Delta`` to the range of the
idempotent ``(D1 (x) D2)(Delta(1))``; the counit's GNS representation is the
monoidal unit; conjugates arise from the antipode.  Sectors (irreducible
blocks) carry intrinsic dimensions d_q obtained two independent ways — the
grouplike trace formula and zigzag-normalized standard solutions of the
conjugate equations — and assemble into vacuum-indexed dimension matrices
whose Perron eigenvalue is the Markov index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Block,
    BlockDecomposition,
    GnsRep,
    _minimal_central_idempotents,
    _minimal_idempotent_in_block,
    _support_key,
    block_decomposition,
    gns_rep,
    induced_algebra,
    markov_trace,
)
from .config import Tolerance, get_tol, round_to_int
from .errors import (
    CrossCheckMismatch,
    FactorizationResidualTooLarge,
    NoInvolution,
    NonScalarIndex,
    NotConnected,
    NotProportionalToMinimal,
    NotSemisimple,
    VacuumAssignmentFailed,
    ZeroIntertwiner,
)
from .integrals import CanonicalGrouplikes, canonical_grouplike
from .linalg import Subspace, kernel, lstsq, normalize_phase, orth, perron_frobenius
from .report import AxiomReport
from .wha import WeakHopfAlgebra, dual_wha

__all__ = [
    "Representation",
    "regular_representation",
    "gns_counit_rep",
    "intertwiner_space",
    "monoidal_product",
    "conjugate_rep",
    "VacuumData",
    "vacua",
    "block_multiplicities",
    "StandardSolution",
    "standard_solutions",
    "Sector",
    "SectorTable",
    "sector_dimensions",
    "dimension_factorization",
    "markov_index",
    "irreducible_representations",
]


@dataclass
class Representation:
    """An algebra representation ``e_j -> matrices[j]`` on a Hilbert carrier."""

    wha: WeakHopfAlgebra
    matrices: np.ndarray  # (n, d, d)
    name: str = ""
    isometry: np.ndarray | None = None  # for monoidal products: carrier -> H1 (x) H2
    factors: tuple["Representation", "Representation"] | None = None
    gns: GnsRep | None = None

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def apply(self, a):
        return np.einsum("j,jab->ab", np.asarray(a, dtype=complex).ravel(), self.matrices)

    def validate(self, tol: Tolerance | None = None) -> AxiomReport:
        tol = get_tol(tol)
        rep = AxiomReport(self.name or "representation")
        c = self.wha.algebra.c
        scale = max(1.0, float(np.linalg.norm(self.matrices)))
        lhs = np.einsum("iab,jbc->ijac", self.matrices, self.matrices, optimize=True)
        rhs = np.einsum("ijk,kac->ijac", c, self.matrices, optimize=True)
        rep.add("representation-multiplicative", np.linalg.norm(lhs - rhs), tol.bound(scale**2) * 10)
        rep.add(
            "representation-unital",
            np.linalg.norm(self.apply(self.wha.unit) - np.eye(self.dim)),
            tol.bound(scale) * 10,
        )
        return rep

    def is_star(self, tol: Tolerance | None = None) -> bool:
        tol = get_tol(tol)
        inv = self.wha.algebra.involution
        if inv is None:
            return False
        starred = np.einsum("mj,mab->jab", inv, self.matrices)
        adjoint = np.conj(self.matrices.transpose(0, 2, 1))
        return float(np.linalg.norm(starred - adjoint)) <= tol.bound(
            max(1.0, float(np.linalg.norm(self.matrices)))
        ) * 100

    def direct_sum(self, other: "Representation") -> "Representation":
        n = self.wha.dim
        d1, d2 = self.dim, other.dim
        mats = np.zeros((n, d1 + d2, d1 + d2), dtype=complex)
        mats[:, :d1, :d1] = self.matrices
        mats[:, d1:, d1:] = other.matrices
        return Representation(self.wha, mats, name=f"{self.name}(+){other.name}")


def regular_representation(w: WeakHopfAlgebra) -> Representation:
    """Left multiplication on the algebra itself."""
    return Representation(w, w.algebra._lmats.copy(), name="regular")


def gns_counit_rep(w: WeakHopfAlgebra, tol: Tolerance | None = None) -> Representation:
    """GNS representation of the counit: the monoidal unit D_eps.

    The carrier dimension equals dim A^L (cross-checked).
    """
    tol = get_tol(tol)
    g = gns_rep(w.algebra, w.eps, tol)
    n = w.dim
    mats = np.stack([g.rep(w.algebra.basis_vector(j)) for j in range(n)])
    rep = Representation(w, mats, name="D_eps", gns=g)
    al_dim = w.counital_subalgebras.left.dim
    if rep.dim != al_dim:
        raise CrossCheckMismatch(
            f"counit GNS carrier has dimension {rep.dim} but dim A^L = {al_dim}"
        )
    return rep


def intertwiner_space(
    w: WeakHopfAlgebra, d1: Representation, d2: Representation, tol: Tolerance | None = None
) -> list[np.ndarray]:
    """Basis of { T : H1 -> H2 with T D1(a) = D2(a) T }."""
    tol = get_tol(tol)
    a, b = d1.dim, d2.dim
    if a == 0 or b == 0:
        return []
    rows = []
    for j in range(w.dim):
        rows.append(np.kron(np.eye(b), d1.matrices[j].T) - np.kron(d2.matrices[j], np.eye(a)))
    basis = kernel(np.vstack(rows), tol)
    return [basis[:, k].reshape(b, a) for k in range(basis.shape[1])]


def monoidal_product(
    w: WeakHopfAlgebra, d1: Representation, d2: Representation, tol: Tolerance | None = None
) -> Representation:
    """Truncated tensor product: compress (D1 (x) D2) o Delta to ran (D1 (x) D2)(Delta(1)).

    The compression is multiplicative and unital because ``Delta(1)`` absorbs
    ``Delta(a)`` on both sides; the carrier may be zero-dimensional.
    """
    tol = get_tol(tol)
    n = w.dim
    da, db = d1.dim, d2.dim
    t = np.einsum("pqj,pac,qbd->jabcd", w.delta3, d1.matrices, d2.matrices, optimize=True)
    t = t.reshape(n, da * db, da * db)
    p = np.einsum("j,jab->ab", w.unit, t)
    v = orth(p, tol)
    mats = np.einsum("am,jab,bk->jmk", np.conj(v), t, v, optimize=True)
    return Representation(
        w, mats, name=f"{d1.name}(x){d2.name}", isometry=v, factors=(d1, d2)
    )


def _antilinear_star_antipode(w: WeakHopfAlgebra):
    """Matrix K with S(a)* = K conj(a)."""
    if w.algebra.involution is None:
        raise NoInvolution(f"{w.name} carries no involution")
    return w.algebra.involution @ np.conj(w.antipode)


def conjugate_rep(w: WeakHopfAlgebra, d: Representation, tol: Tolerance | None = None) -> Representation:
    """Conjugate representation ``a -> conj(D(S(a)*))`` on the conjugate carrier."""
    tol = get_tol(tol)
    k = _antilinear_star_antipode(w)
    mats = np.stack([np.conj(d.apply(k[:, j])) for j in range(w.dim)])
    out = Representation(w, mats, name=f"conj({d.name})")
    out.validate(tol).raise_if_failed()
    return out


def _star_conjugate_rep(
    w: WeakHopfAlgebra, d: Representation, g_half, g_half_inv, tol: Tolerance | None = None
) -> Representation:
    """Conjugate twisted by g^(1/2) so a *-representation stays a *-representation."""
    tol = get_tol(tol)
    k = _antilinear_star_antipode(w)
    mats = np.stack(
        [np.conj(d.apply(w.mul(g_half, w.mul(k[:, j], g_half_inv)))) for j in range(w.dim)]
    )
    out = Representation(w, mats, name=f"conj({d.name})")
    out.validate(tol).raise_if_failed()
    return out


def irreducible_representations(
    w: WeakHopfAlgebra, tol: Tolerance | None = None, gram: np.ndarray | None = None
) -> list[Representation]:
    """One unitary irreducible representation per Wedderburn block, in block order.

    Carriers are the left ideals ``A p`` (p a minimal idempotent),
    orthonormalized in the inner product of a faithful Haar state.
    """
    tol = get_tol(tol)
    if gram is None:
        from .integrals import haar_state

        state = haar_state(w, tol)
        if state is None:
            raise NotSemisimple(f"{w.name}: irreducible carriers need a Haar state")
        if not state.faithful:
            raise NotSemisimple(f"{w.name}: Haar state is not faithful")
        gram = state.gram
    blocks = block_decomposition(w.algebra, tol)
    out = []
    for b in blocks:
        p = _minimal_idempotent_in_block(w.algebra, b, tol)
        ideal = orth(w.algebra.right_mult(p), tol)  # columns span A p
        k = ideal.conj().T @ gram @ ideal
        vals, vecs = np.linalg.eigh((k + k.conj().T) / 2)
        basis = ideal @ (vecs / np.sqrt(vals))
        mats = np.stack(
            [basis.conj().T @ gram @ w.algebra.left_mult(w.algebra.basis_vector(j)) @ basis for j in range(w.dim)]
        )
        rep = Representation(w, mats, name=f"irrep[{b.size}]")
        if rep.dim != b.size:
            raise CrossCheckMismatch(f"ideal carrier {rep.dim} != block size {b.size}")
        out.append(rep)
    return out


@dataclass
class VacuumData:
    """Minimal projections of Z^L with counit weights, and the unit rep D_eps."""

    projections: list[np.ndarray]
    weights: np.ndarray
    counit_rep: Representation
    rep_projections: list[np.ndarray]

    @property
    def count(self) -> int:
        return len(self.projections)


def vacua(w: WeakHopfAlgebra, tol: Tolerance | None = None) -> VacuumData:
    """Vacuum data: minimal projections z^L_mu of Z^L, weights k(mu) = eps(z_mu),
    and their images in the counit GNS representation, which must be nonzero
    orthogonal projections summing to the identity."""
    tol = get_tol(tol)
    sub = w.counital_subalgebras
    idems = _minimal_central_idempotents(w.algebra, sub.center_left, tol)
    idems.sort(key=lambda z: _support_key(z, tol))
    d_eps = gns_counit_rep(w, tol)
    weights = []
    rep_projections = []
    total = np.zeros((d_eps.dim, d_eps.dim), dtype=complex)
    for z in idems:
        k_mu = w.counit(z)
        if abs(k_mu.imag) > 1e-9 * max(1.0, abs(k_mu)) or k_mu.real <= 0:
            raise VacuumAssignmentFailed(f"vacuum weight eps(z) = {k_mu} is not positive")
        weights.append(k_mu.real)
        p = d_eps.apply(z)
        herm = float(np.linalg.norm(p - p.conj().T))
        idem = float(np.linalg.norm(p @ p - p))
        if herm > 1e-8 or idem > 1e-8:
            raise VacuumAssignmentFailed(
                f"vacuum image is not an orthogonal projection (residuals {herm:.2e}, {idem:.2e})"
            )
        if float(np.linalg.norm(p)) <= 1e-9:
            raise VacuumAssignmentFailed("a minimal projection of Z^L vanishes in D_eps")
        rep_projections.append(p)
        total += p
    if float(np.linalg.norm(total - np.eye(d_eps.dim))) > 1e-8:
        raise VacuumAssignmentFailed("vacuum projections do not sum to the identity on D_eps")
    end_dim = len(intertwiner_space(w, d_eps, d_eps, tol))
    if end_dim != len(idems):
        raise CrossCheckMismatch(
            f"End(D_eps) has dimension {end_dim} but Z^L has {len(idems)} minimal projections"
        )
    return VacuumData(
        projections=idems,
        weights=np.array(weights),
        counit_rep=d_eps,
        rep_projections=rep_projections,
    )


def block_multiplicities(
    w: WeakHopfAlgebra,
    rep: Representation,
    blocks: BlockDecomposition | None = None,
    tol: Tolerance | None = None,
) -> np.ndarray:
    """Integers N_q(D) = rank(D(z_q)) / n_q for each block q."""
    tol = get_tol(tol)
    if blocks is None:
        blocks = block_decomposition(w.algebra, tol)
    out = []
    for b in blocks:
        if rep.dim == 0:
            out.append(0)
            continue
        r = np.linalg.matrix_rank(rep.apply(b.central_idempotent), tol=1e-8)
        out.append(round_to_int(r / b.size, f"multiplicity of block size {b.size}"))
    return np.array(out, dtype=int)


# ---------------------------------------------------------------------------
# standard solutions of the conjugate equations


def _hom_supported_on(w, d_eps, target, proj, tol) -> list[np.ndarray]:
    """Hom(D_eps, target) elements X with X = X proj (proj = D_eps(z_mu))."""
    a, b = d_eps.dim, target.dim
    if b == 0:
        return []
    rows = [
        np.kron(np.eye(b), d_eps.matrices[j].T) - np.kron(target.matrices[j], np.eye(a))
        for j in range(w.dim)
    ]
    rows.append(np.kron(np.eye(b), (np.eye(a) - proj).T))
    basis = kernel(np.vstack(rows), tol)
    return [basis[:, k].reshape(b, a) for k in range(basis.shape[1])]


def _unit_intertwiner(w, d_eps, d, side, tol):
    """Unitary in Hom(d, eps (x) d) (side='left') or Hom(d, d (x) eps)."""
    prod = (
        monoidal_product(w, d_eps, d, tol) if side == "left" else monoidal_product(w, d, d_eps, tol)
    )
    homs = intertwiner_space(w, d, prod, tol)
    if len(homs) != 1:
        raise CrossCheckMismatch(
            f"unit constraint Hom({d.name}, {prod.name}) has dimension {len(homs)}, expected 1"
        )
    u = homs[0]
    c = np.trace(u.conj().T @ u) / d.dim
    u = u / np.sqrt(c.real)
    if prod.dim != d.dim or float(np.linalg.norm(u @ u.conj().T - np.eye(prod.dim))) > 1e-7:
        raise CrossCheckMismatch(f"unit intertwiner for {d.name} is not unitary")
    u = u.reshape(prod.dim, d.dim)
    flat = normalize_phase(u.reshape(-1), tol)
    return flat.reshape(prod.dim, d.dim), prod


def _associator(w, ra, rb, rc, tol):
    """Unitary from H_((ab)c) to H_(a(bc)), plus the four product reps."""
    ab = monoidal_product(w, ra, rb, tol)
    bc = monoidal_product(w, rb, rc, tol)
    left = monoidal_product(w, ab, rc, tol)
    right = monoidal_product(w, ra, bc, tol)
    u_l = np.kron(ab.isometry, np.eye(rc.dim)) @ left.isometry
    u_r = np.kron(np.eye(ra.dim), bc.isometry) @ right.isometry
    a = u_r.conj().T @ u_l
    if left.dim != right.dim:
        raise CrossCheckMismatch("iterated monoidal products have different carrier dimensions")
    if float(np.linalg.norm(a @ a.conj().T - np.eye(right.dim))) > 1e-7:
        raise CrossCheckMismatch("associator is not unitary")
    worst = max(
        float(np.linalg.norm(a @ left.matrices[j] - right.matrices[j] @ a)) for j in range(w.dim)
    )
    if worst > 1e-7 * max(1.0, float(np.linalg.norm(left.matrices))):
        raise CrossCheckMismatch(f"associator fails to intertwine (residual {worst:.3e})")
    return a, ab, bc, left, right


def _scalar_of(m, what):
    d = m.shape[0]
    lam = complex(np.trace(m) / d)
    resid = float(np.linalg.norm(m - lam * np.eye(d)))
    if resid > 1e-6 * max(1.0, abs(lam)):
        raise NonScalarIndex(f"{what} is not scalar (residual {resid:.3e})")
    if abs(lam) < 1e-9:
        raise ZeroIntertwiner(f"{what} vanishes")
    return lam


@dataclass
class StandardSolution:
    """Normalized solution (R, Rbar) of the conjugate equations for one sector."""

    r: np.ndarray  # H_eps -> H_(conj q (x) q)
    rbar: np.ndarray  # H_eps -> H_(q (x) conj q)
    d: float
    vacuum_left: int  # nu with Rbar* Rbar = d * D_eps(z_nu)
    vacuum_right: int  # mu with R* R = d * D_eps(z_mu)
    zigzag_left: complex
    zigzag_right: complex
    conj: Representation


def _pick_supported_hom(w, d_eps, target, vac: VacuumData, tol, what: str):
    """The unique vacuum mu with nontrivial Hom supported on D_eps(z_mu), and its element."""
    found = []
    for mu, proj in enumerate(vac.rep_projections):
        homs = _hom_supported_on(w, d_eps, target, proj, tol)
        if homs:
            found.append((mu, homs))
    if not found:
        raise ZeroIntertwiner(f"{what}: intertwiner space is trivial")
    if len(found) > 1:
        labels = [mu for mu, _ in found]
        raise NotProportionalToMinimal(f"{what}: support on several minimal projections {labels}")
    mu, homs = found[0]
    if len(homs) > 1:
        raise VacuumAssignmentFailed(f"{what}: Hom space on vacuum {mu} has dimension {len(homs)}")
    x = homs[0]
    flat = normalize_phase(x.reshape(-1), tol)
    return mu, flat.reshape(x.shape)


def _proportionality_constant(x, proj, what):
    xe = x.conj().T @ x
    denom = np.trace(proj).real
    c = float((np.trace(xe) / denom).real)
    resid = float(np.linalg.norm(xe - c * proj))
    if resid > 1e-7 * max(1.0, abs(c)):
        raise NotProportionalToMinimal(f"{what}: X*X is not proportional to the minimal projection")
    return c


def standard_solutions(
    w: WeakHopfAlgebra,
    q: int | Representation,
    tol: Tolerance | None = None,
    _context: dict | None = None,
) -> StandardSolution:
    """Standard solution of the conjugate equations for the irreducible block ``q``.

    ``R`` spans Hom(D_eps, conj(q) (x) q) over a single vacuum mu (= q^R) and
    ``Rbar`` spans Hom(D_eps, q (x) conj(q)) over nu (= q^L).  The pair is
    rescaled so that both proportionality constants equal d_q and the zigzag
    composites have modulus one; d_q itself is the scaling-invariant
    ``sqrt(c1 c2 / |lambda1 lambda2|)`` of the raw data.
    """
    tol = get_tol(tol)
    ctx = _context or {}
    cg: CanonicalGrouplikes | None = ctx.get("grouplike")
    if cg is None:
        cg = canonical_grouplike(w, tol)
        if cg is None:
            raise NotSemisimple(f"{w.name}: standard solutions need the Haar integral")
    vac: VacuumData = ctx.get("vacua") or vacua(w, tol)
    if isinstance(q, Representation):
        d_q = q
    else:
        irreps = ctx.get("irreps")
        if irreps is None:
            irreps = irreducible_representations(w, tol, gram=cg.gns.gram)
        d_q = irreps[q]
    d_eps = vac.counit_rep
    qbar = _star_conjugate_rep(w, d_q, cg.g_half, cg.g_half_inv, tol)

    assoc, m2, m1, left, right = _associator(w, d_q, qbar, d_q, tol)
    # m2 = q (x) qbar, m1 = qbar (x) q, left = (q qbar) q, right = q (qbar q)
    mu, r = _pick_supported_hom(w, d_eps, m1, vac, tol, "R")
    nu, rbar = _pick_supported_hom(w, d_eps, m2, vac, tol, "Rbar")
    c1 = _proportionality_constant(r, vac.rep_projections[mu], "R")
    c2 = _proportionality_constant(rbar, vac.rep_projections[nu], "Rbar")

    u_r, qe = _unit_intertwiner(w, d_eps, d_q, "right", tol)
    u_l, eq = _unit_intertwiner(w, d_eps, d_q, "left", tol)
    x1 = right.isometry.conj().T @ np.kron(np.eye(d_q.dim), r) @ qe.isometry
    x2 = eq.isometry.conj().T @ np.kron(rbar.conj().T, np.eye(d_q.dim)) @ left.isometry
    lam1 = _scalar_of(u_l.conj().T @ x2 @ assoc.conj().T @ x1 @ u_r, "zigzag on q")

    assoc2, m1b, m2b, left2, right2 = _associator(w, qbar, d_q, qbar, tol)
    ub_r, qbe = _unit_intertwiner(w, d_eps, qbar, "right", tol)
    ub_l, eqb = _unit_intertwiner(w, d_eps, qbar, "left", tol)
    y1 = right2.isometry.conj().T @ np.kron(np.eye(qbar.dim), rbar) @ qbe.isometry
    y2 = eqb.isometry.conj().T @ np.kron(r.conj().T, np.eye(qbar.dim)) @ left2.isometry
    lam2 = _scalar_of(ub_l.conj().T @ y2 @ assoc2.conj().T @ y1 @ ub_r, "zigzag on conj q")

    if abs(abs(lam1) - abs(lam2)) > 1e-6 * max(abs(lam1), abs(lam2)):
        raise CrossCheckMismatch(
            f"zigzag scalars have different moduli: |{lam1:.6g}| vs |{lam2:.6g}|"
        )
    d_val = float(np.sqrt(c1 * c2 / abs(lam1 * lam2)))
    r = r * np.sqrt(d_val / c1)
    rbar = rbar * np.sqrt(d_val / c2)
    scale = np.sqrt(d_val / c1) * np.sqrt(d_val / c2)
    return StandardSolution(
        r=r,
        rbar=rbar,
        d=d_val,
        vacuum_left=nu,
        vacuum_right=mu,
        zigzag_left=lam1 * scale,
        zigzag_right=lam2 * scale,
        conj=qbar,
    )


# ---------------------------------------------------------------------------
# sector table, dimension matrices, Markov index


@dataclass
class Sector:
    index: int
    size: int  # n_q
    rep: Representation
    d: float
    vacuum_left: int
    vacuum_right: int
    solution: StandardSolution


@dataclass
class SectorTable:
    wha: WeakHopfAlgebra
    blocks: BlockDecomposition
    vacua: VacuumData
    sectors: list[Sector]
    grouplike: CanonicalGrouplikes

    @property
    def delta(self) -> float:
        val, _ = perron_frobenius(self.d_matrix)
        return val

    @property
    def d_matrix(self) -> np.ndarray:
        """Regular dimension matrix: sum_q n_q d_q e_(qL, qR)."""
        v = self.vacua.count
        out = np.zeros((v, v))
        for s in self.sectors:
            out[s.vacuum_left, s.vacuum_right] += s.size * s.d
        return out

    def multiplicities(self, rep: Representation) -> np.ndarray:
        return block_multiplicities(self.wha, rep, self.blocks)

    def dimension_matrix(self, rep: Representation) -> np.ndarray:
        """Vacuum-indexed dimension matrix of an arbitrary representation."""
        mult = self.multiplicities(rep)
        v = self.vacua.count
        out = np.zeros((v, v))
        for n_q, s in zip(mult, self.sectors):
            out[s.vacuum_left, s.vacuum_right] += n_q * s.d
        return out


def _block_trace(w: WeakHopfAlgebra, block: Block, x) -> complex:
    return w.algebra.regular_trace(w.algebra.mul(block.central_idempotent, x)) / block.size


def sector_dimensions(
    w: WeakHopfAlgebra,
    grouplike: CanonicalGrouplikes | None = None,
    tol: Tolerance | None = None,
) -> SectorTable:
    """Full sector table: vacuum assignments, d_q by two routes, dimension matrix.

    d_q from the grouplike trace formula ``k(qL)^(-1/2) k(qR)^(-1/2) tr_q(g)``
    must agree with the standard-solution route within 1e-6.
    """
    tol = get_tol(tol)
    cg = grouplike or canonical_grouplike(w, tol)
    if cg is None:
        raise NotSemisimple(f"{w.name}: sector pipeline needs the Haar integral")
    vac = vacua(w, tol)
    blocks = block_decomposition(w.algebra, tol)
    irreps = irreducible_representations(w, tol, gram=cg.gns.gram)
    ctx = {"grouplike": cg, "vacua": vac, "irreps": irreps}
    sectors = []
    for qi, (block, rep) in enumerate(zip(blocks, irreps)):
        sol = standard_solutions(w, qi, tol, _context=ctx)
        tr_g = _block_trace(w, block, cg.g)
        if abs(tr_g.imag) > 1e-8 * max(1.0, abs(tr_g)):
            raise CrossCheckMismatch(f"tr_q(g) = {tr_g} is not real")
        d_trace = float(tr_g.real) / np.sqrt(vac.weights[sol.vacuum_left] * vac.weights[sol.vacuum_right])
        if abs(d_trace - sol.d) > 1e-6 * max(1.0, abs(d_trace)):
            raise CrossCheckMismatch(
                f"sector {qi}: trace formula gives d = {d_trace:.9g}, standard solution {sol.d:.9g}"
            )
        sectors.append(
            Sector(
                index=qi,
                size=block.size,
                rep=rep,
                d=d_trace,
                vacuum_left=sol.vacuum_left,
                vacuum_right=sol.vacuum_right,
                solution=sol,
            )
        )
    return SectorTable(wha=w, blocks=blocks, vacua=vac, sectors=sectors, grouplike=cg)


def _corner_markov_index(w: WeakHopfAlgebra, vac: VacuumData, tol: Tolerance) -> float:
    """Markov-trace index of z A^L ⊂ z A for the first vacuum projection z."""
    z = vac.projections[0]
    corner_space = Subspace(orth(w.algebra.left_mult(z), tol), w.dim, tol)
    corner, qmat = induced_algebra(w.algebra, corner_space, unit_vec=z, tol=tol, name=f"{w.name}|corner")
    al = w.counital_subalgebras.left
    cols = w.algebra.left_mult(z) @ al.basis
    coords, resid = lstsq(qmat, cols, tol)
    if resid > 1e-8 * max(1.0, float(np.linalg.norm(cols))):
        raise CrossCheckMismatch("z A^L does not sit inside the corner algebra")
    sub = Subspace(orth(coords, tol), corner.dim, tol)
    mt = markov_trace(corner, sub, tol)
    if isinstance(mt, list):
        raise NotConnected("corner inclusion is not connected")
    return float(mt.index)


def markov_index(w: WeakHopfAlgebra, tol: Tolerance | None = None) -> float:
    """Markov index δ = PF(d_A), cross-checked against PF(d_dual) and the
    corner inclusion z A^L ⊂ z A; for pure fixtures also against Σ n_q d_q."""
    tol = get_tol(tol)
    if w.counital_subalgebras.hypercenter.dim != 1:
        raise NotConnected(f"{w.name} is decomposable; split along its hypercenter first")
    table = sector_dimensions(w, tol=tol)
    delta_a = table.delta
    table_dual = sector_dimensions(dual_wha(w), tol=tol)
    delta_b = table_dual.delta
    delta_c = _corner_markov_index(w, table.vacua, tol)
    values = (delta_a, delta_b, delta_c)
    spread = max(values) - min(values)
    if spread > 1e-6 * max(1.0, max(values)):
        raise CrossCheckMismatch(
            f"Markov index routes disagree: PF(d_A) = {delta_a:.9g}, "
            f"PF(d_dual) = {delta_b:.9g}, corner inclusion = {delta_c:.9g}"
        )
    if table.vacua.count == 1:
        direct = sum(s.size * s.d for s in table.sectors)
        if abs(direct - delta_a) > 1e-6 * max(1.0, delta_a):
            raise CrossCheckMismatch(
                f"pure-case sum {direct:.9g} disagrees with PF value {delta_a:.9g}"
            )
    return float(delta_a)


def dimension_factorization(
    w: WeakHopfAlgebra,
    tol: Tolerance | None = None,
    tables: tuple[SectorTable, SectorTable] | None = None,
):
    """Nonnegative 𝐝^L (vacua_A x vacua_dual) with 𝐝_A = 𝐝^L 𝐝^R, 𝐝_dual = 𝐝^R 𝐝^L,
    𝐝^R = (𝐝^L)^T.  Closed form when either side has a single vacuum; otherwise a
    projected least-squares search over the nonnegative cone."""
    tol = get_tol(tol)
    if tables is None:
        t_a = sector_dimensions(w, tol=tol)
        t_b = sector_dimensions(dual_wha(w), tol=tol)
    else:
        t_a, t_b = tables
    da, db = t_a.d_matrix, t_b.d_matrix
    v, vd = da.shape[0], db.shape[0]
    if vd == 1:
        x = np.sqrt(np.diag(da)).reshape(v, 1)
    elif v == 1:
        x = np.sqrt(np.diag(db)).reshape(1, vd)
    else:
        x = _factorize_nonneg(da, db, tol)
    resid = max(
        float(np.linalg.norm(x @ x.T - da)),
        float(np.linalg.norm(x.T @ x - db)),
    )
    if resid > 1e-6 * max(1.0, float(np.linalg.norm(da))):
        raise FactorizationResidualTooLarge(
            f"no nonnegative factorization within tolerance (residual {resid:.3e})"
        )
    return x, x.T


def _factorize_nonneg(da, db, tol, iters: int = 20000):
    """Projected gradient descent for X >= 0 with X X^T = da, X^T X = db."""
    v, vd = da.shape[0], db.shape[0]
    lam_a, u = perron_frobenius(da, tol)
    lam_b, s = perron_frobenius(db, tol)
    u = u / np.linalg.norm(u)
    s = s / np.linalg.norm(s)
    x = np.sqrt(max(lam_a, 1e-12)) * np.outer(u, s)
    rate = 1e-2 / max(1.0, float(np.max(da)))
    for _ in range(iters):
        r1 = x @ x.T - da
        r2 = x.T @ x - db
        grad = 2 * (r1 + r1.T) @ x + 2 * x @ (r2 + r2.T)
        x = np.clip(x - rate * grad, 0.0, None)
    return x
