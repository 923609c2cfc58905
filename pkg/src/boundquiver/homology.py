"""Projective covers, syzygies, transpose, Auslander-Reiten translates and Ext^1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .linalg import Matrix, complement_rows, solve_left
from .repmod import (
    ModuleHom,
    ProjectiveSum,
    Representation,
    cokernel,
    compose,
    direct_sum,
    dual,
    factor_through_epi,
    hom_basis,
    hom_space,
    kernel,
    map_from_projective,
    projective_sum,
    radical,
)

if TYPE_CHECKING:
    from .decomp import Decomposition


@dataclass(frozen=True)
class ProjectiveCover:
    projective: ProjectiveSum
    epi: ModuleHom


@dataclass(frozen=True)
class ProjectivePresentation:
    """Minimal presentation ``p1 --map--> p0 --cover--> M -> 0``."""

    p1: ProjectiveSum
    p0: ProjectiveSum
    map: ModuleHom
    cover: ModuleHom
    syzygy_inclusion: ModuleHom


def projective_cover(m: Representation) -> ProjectiveCover:
    """Minimal projective cover: one copy of e_v A per basis vector of top(M) at v."""
    _, rad_inc = radical(m)
    tops: list[int] = []
    images: list[Matrix] = []
    for v in m.algebra.quiver.vertices:
        comp = complement_rows(rad_inc[v])
        for k in range(comp.rows):
            tops.append(v)
            images.append(comp.row(k))
    ps = projective_sum(m.algebra, tops)
    return ProjectiveCover(ps, map_from_projective(ps, m, images))


def minimal_presentation(m: Representation) -> ProjectivePresentation:
    c0 = projective_cover(m)
    omega, inc = kernel(c0.epi)
    c1 = projective_cover(omega)
    return ProjectivePresentation(c1.projective, c0.projective, compose(inc, c1.epi), c0.epi, inc)


def syzygy(m: Representation, n: int = 1) -> Representation:
    if n < 1:
        raise ValueError("syzygy order must be >= 1")
    for _ in range(n):
        m = kernel(projective_cover(m).epi)[0]
    return m


def cosyzygy(m: Representation, n: int = 1) -> Representation:
    """Cokernel of a minimal injective coresolution, via duality and syzygies over A^op."""
    if n < 1:
        raise ValueError("cosyzygy order must be >= 1")
    return dual(syzygy(dual(m), n))


def is_projective(m: Representation) -> bool:
    return projective_cover(m).projective.rep.dimension == m.dimension


def is_injective(m: Representation) -> bool:
    return is_projective(dual(m))


def injective_envelope(m: Representation) -> ModuleHom:
    c = projective_cover(dual(m))
    return ModuleHom(m, dual(c.projective.rep), [a.T for a in c.epi.maps], check=False)


def transpose(m: Representation) -> Representation:
    """Auslander-Bridger transpose: coker(Hom(P0, A) -> Hom(P1, A)) over A^op."""
    algebra = m.algebra
    op = algebra.opposite
    pres = minimal_presentation(m)
    p0, p1 = pres.p0, pres.p1
    q0 = projective_sum(op, p0.tops)
    q1 = projective_sum(op, p1.tops)
    # the component of map from copy t of p1 to copy s of p0 is left multiplication
    # by an element a_st of e_s A e_t; Hom(-, A) turns it into left multiplication
    # by a_st on A e_s, i.e. the reversed element acting e_s A^op -> e_t A^op
    images = [[0] * q1.rep.dim(v) for v in p0.tops]
    q1_index = [{lab: k for k, lab in enumerate(ls)} for ls in q1.labels]
    for t, vt in enumerate(p1.tops):
        row = pres.map[vt].row(p1.generator_index(t)).tolist()[0]
        for s, coeffs in p0.coordinates(vt, row).items():
            vs = p0.tops[s]
            for path, c in coeffs.items():
                images[s][q1_index[vs - 1][(t, algebra.reverse(path))]] += c
    img = [Matrix([row], op.p, shape=(1, len(row))) for row in images]
    hom = map_from_projective(q0, q1.rep, img)
    return cokernel(hom)[0]


def tau(m: Representation) -> Representation:
    return dual(transpose(m))


def tau_inverse(m: Representation) -> Representation:
    return transpose(dual(m))


def tau_n(m: Representation, i: int) -> Representation:
    """Higher translate tau(Omega^(i-1)(M))."""
    if i < 1:
        raise ValueError("tau_n needs i >= 1")
    return tau(m if i == 1 else syzygy(m, i - 1))


# -- Ext^1 --------------------------------------------------------------------


@dataclass(frozen=True)
class ExtClass:
    """A class in Ext^1(X, Y) represented by a map Omega(X) -> Y."""

    rep: ModuleHom
    cover: ModuleHom = field(repr=False)
    inclusion: ModuleHom = field(repr=False)

    def is_zero(self) -> bool:
        restr = _restriction_space(self.cover, self.inclusion, self.rep.target)
        v = self.rep.vector()
        return solve_left(restr, Matrix([v], restr.p, shape=(1, len(v)))) is not None

    def scale(self, c: int) -> ExtClass:
        return ExtClass(self.rep.scale(c), self.cover, self.inclusion)


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> Y --left--> W --right--> X -> 0."""

    left: ModuleHom
    right: ModuleHom

    @property
    def middle(self) -> Representation:
        return self.left.target

    def is_exact(self) -> bool:
        if not (self.left.is_injective() and self.right.is_surjective()):
            return False
        if not compose(self.right, self.left).is_zero():
            return False
        return all(
            l.rank() + r.rank() == d
            for l, r, d in zip(self.left.maps, self.right.maps, self.middle.dims)
        )

    def is_split(self) -> bool:
        """True iff ``right`` has a section, found by solving a linear system in Hom(X, W)."""
        x, w = self.right.target, self.right.source
        basis = hom_basis(x, w)
        ident = ModuleHom.identity(x).vector()
        if not basis:
            return x.dimension == 0
        rows = [compose(self.right, h).vector() for h in basis]
        a = Matrix(rows, x.p, shape=(len(rows), len(ident)))
        b = Matrix([ident], x.p, shape=(1, len(ident)))
        return solve_left(a, b) is not None


def _restriction_space(cover: ModuleHom, inclusion: ModuleHom, y: Representation) -> Matrix:
    """Vectorised maps Omega(X) -> Y that factor through the inclusion into P0."""
    rows = [compose(h, inclusion).vector() for h in hom_basis(cover.source, y)]
    n = len(ModuleHom.zero(inclusion.source, y).vector())
    return Matrix(rows, y.p, shape=(len(rows), n))


def ext1_basis(x: Representation, y: Representation) -> list[ExtClass]:
    """Basis of Ext^1(X, Y) = Hom(Omega X, Y) / {maps factoring through Omega X -> P0}."""
    if x.algebra != y.algebra:
        raise ValueError("Ext between modules over different algebras")
    cover = projective_cover(x).epi
    omega, inc = kernel(cover)
    homs = hom_space(omega, y)
    restr = _restriction_space(cover, inc, y)
    span = restr
    out = []
    for row in homs.tolist():
        v = Matrix([row], y.p, shape=(1, homs.cols))
        if solve_left(span, v) is None:
            out.append(ExtClass(ModuleHom.from_vector(omega, y, row), cover, inc))
            span = Matrix.vstack([span, v], homs.cols, y.p)
    return out


def extension_from_class(x: Representation, y: Representation, c: ExtClass) -> ShortExactSequence:
    """Pushout of 0 -> Omega X -> P0 -> X -> 0 along the representative of ``c``."""
    if c.rep.target != y or c.cover.target != x:
        raise ValueError("extension class was not computed for these modules")
    p0 = c.cover.source
    total, incs, projs = direct_sum([p0, y])
    rel = compose(incs[0], c.inclusion) - compose(incs[1], c.rep)
    w, q = cokernel(rel)
    left = compose(q, incs[1])
    right = factor_through_epi(compose(c.cover, projs[0]), q)
    return ShortExactSequence(left, right)


# -- syzygy membership ---------------------------------------------------------


@dataclass
class SyzygyTest:
    """Outcome of the summand criterion for n-th syzygies."""

    module: Representation
    n: int
    holds: bool
    witness: Representation
    witness_decomposition: "Decomposition"
    missing: list[Representation]


def nth_syzygy_test(x: Representation, n: int, seed: int = 0) -> SyzygyTest:
    """X is a summand of an n-th syzygy iff it is a summand of P + Omega^n(Omega^-n(X))."""
    from .decomp import decompose, summand_multiplicity

    if n < 1:
        raise ValueError("n must be >= 1")
    witness = syzygy(cosyzygy(x, n), n)
    wd = decompose(witness, seed)
    missing = []
    for rep, k in decompose(x, seed).summands:
        if is_projective(rep):
            continue
        if summand_multiplicity(rep, wd, seed) < k:
            missing.append(rep)
    return SyzygyTest(x, n, not missing, witness, wd, missing)


def is_nth_syzygy(x: Representation, n: int, seed: int = 0) -> bool:
    return nth_syzygy_test(x, n, seed).holds


@dataclass
class TauOmegaTest:
    module: Representation
    i: int
    holds: bool
    summands: list[tuple[Representation, str, bool]]


def tau_omega_test(x: Representation, i: int, seed: int = 0) -> TauOmegaTest:
    """Membership of X in add tau(Omega^i(mod A)) + injectives, closed under summands."""
    from .decomp import decompose

    if i < 1:
        raise ValueError("i must be >= 1")
    rows = []
    for rep, _ in decompose(x, seed).summands:
        if is_injective(rep):
            rows.append((rep, "injective", True))
        else:
            rows.append((rep, "tau-inverse syzygy test", is_nth_syzygy(tau_inverse(rep), i, seed)))
    return TauOmegaTest(x, i, all(ok for _, _, ok in rows), rows)


def in_tau_omega(x: Representation, i: int, seed: int = 0) -> bool:
    return tau_omega_test(x, i, seed).holds
