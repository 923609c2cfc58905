"""Right modules over monomial algebras, stored as quiver representations.

A representation carries one vector space per vertex and, for each arrow
``a: i -> j``, a ``dims[i] x dims[j]`` matrix acting on row vectors.  A
homomorphism ``f: M -> N`` is a family of ``dims_M[v] x dims_N[v]``
matrices with ``f[i] @ N[a] == M[a] @ f[j]`` for every arrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import AlgebraElement, MonomialAlgebra, Path, trivial
from .errors import RelationViolation
from .linalg import (
    Matrix,
    complement_rows,
    inverse,
    kernel_basis,
    row_basis,
    solve_left,
)


class Representation:
    __slots__ = ("algebra", "dims", "action")

    def __init__(
        self,
        algebra: MonomialAlgebra,
        dims: Sequence[int],
        action: Mapping[str, Matrix | Sequence[Sequence[int]]] | None = None,
        check: bool = True,
    ):
        dims = tuple(int(d) for d in dims)
        if len(dims) != algebra.vertex_count:
            raise ValueError(f"expected {algebra.vertex_count} dimensions, got {len(dims)}")
        if any(d < 0 for d in dims):
            raise ValueError(f"negative dimension in {dims}")
        action = dict(action or {})
        unknown = set(action) - set(algebra.quiver.arrow)
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        p = algebra.p
        mats: dict[str, Matrix] = {}
        for a in algebra.quiver.arrows:
            shape = (dims[a.source - 1], dims[a.target - 1])
            m = action.get(a.label)
            if m is None:
                m = Matrix.zeros(*shape, p)
            elif not isinstance(m, Matrix):
                m = Matrix(m, p, shape=shape if not np.size(m) else None)
            if m.p != p:
                raise ValueError(f"arrow {a.label}: matrix over GF({m.p}), algebra over GF({p})")
            if m.shape != shape:
                raise ValueError(f"arrow {a.label}: expected shape {shape}, got {m.shape}")
            mats[a.label] = m
        self.algebra = algebra
        self.dims = dims
        self.action = mats
        if check:
            for r in algebra.relations:
                if not self.path_action(r).is_zero():
                    raise RelationViolation(f"relation {r} does not act as zero")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def is_zero(self) -> bool:
        return self.dimension == 0

    def path_action(self, path: Path) -> Matrix:
        out = Matrix.identity(self.dim(path.source), self.p)
        for label in path.arrows:
            out = out @ self.action[label]
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.algebra == other.algebra and self.dims == other.dims and self.action == other.action

    def __hash__(self) -> int:
        return hash((self.dims, tuple(self.action[a.label] for a in self.algebra.quiver.arrows)))

    def __repr__(self) -> str:
        return f"Representation(dims={list(self.dims)}, over={self.algebra.name})"

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "arrows": {label: m.tolist() for label, m in self.action.items()},
        }


def zero_module(algebra: MonomialAlgebra) -> Representation:
    return Representation(algebra, [0] * algebra.vertex_count)


class ModuleHom:
    __slots__ = ("source", "target", "maps")

    def __init__(self, source: Representation, target: Representation, maps: Sequence[Matrix], check: bool = True):
        if source.algebra != target.algebra:
            raise ValueError("homomorphism between modules over different algebras")
        maps = tuple(maps)
        if len(maps) != len(source.dims):
            raise ValueError("one matrix per vertex required")
        for v, m in enumerate(maps):
            if m.shape != (source.dims[v], target.dims[v]):
                raise ValueError(f"vertex {v + 1}: expected shape {(source.dims[v], target.dims[v])}, got {m.shape}")
        self.source = source
        self.target = target
        self.maps = maps
        if check:
            for a in source.algebra.quiver.arrows:
                i, j = a.source - 1, a.target - 1
                if maps[i] @ target.action[a.label] != source.action[a.label] @ maps[j]:
                    raise ValueError(f"not a homomorphism: fails to commute with arrow {a.label}")

    @classmethod
    def identity(cls, m: Representation) -> ModuleHom:
        return cls(m, m, [Matrix.identity(d, m.p) for d in m.dims], check=False)

    @classmethod
    def zero(cls, m: Representation, n: Representation) -> ModuleHom:
        return cls(m, n, [Matrix.zeros(a, b, m.p) for a, b in zip(m.dims, n.dims)], check=False)

    def __getitem__(self, v: int) -> Matrix:
        return self.maps[v - 1]

    def vector(self) -> list[int]:
        out: list[int] = []
        for m in self.maps:
            out.extend(m.array.reshape(-1).tolist())
        return out

    @classmethod
    def from_vector(cls, source: Representation, target: Representation, vec: Sequence[int], check: bool = False) -> ModuleHom:
        maps = []
        k = 0
        for a, b in zip(source.dims, target.dims):
            maps.append(Matrix(list(vec[k:k + a * b]), source.p, shape=(a, b)))
            k += a * b
        return cls(source, target, maps, check=check)

    def __add__(self, other: ModuleHom) -> ModuleHom:
        return ModuleHom(self.source, self.target, [a + b for a, b in zip(self.maps, other.maps)], check=False)

    def __sub__(self, other: ModuleHom) -> ModuleHom:
        return ModuleHom(self.source, self.target, [a - b for a, b in zip(self.maps, other.maps)], check=False)

    def __neg__(self) -> ModuleHom:
        return ModuleHom(self.source, self.target, [-a for a in self.maps], check=False)

    def scale(self, c: int) -> ModuleHom:
        return ModuleHom(self.source, self.target, [a.scale(c) for a in self.maps], check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleHom):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.maps == other.maps

    def __hash__(self) -> int:
        return hash(self.maps)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.maps)

    def rank(self) -> int:
        return sum(m.rank() for m in self.maps)

    def is_injective(self) -> bool:
        return all(m.rank() == m.rows for m in self.maps)

    def is_surjective(self) -> bool:
        return all(m.rank() == m.cols for m in self.maps)

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def inverse(self) -> ModuleHom:
        return ModuleHom(self.target, self.source, [inverse(m) for m in self.maps], check=False)

    def __repr__(self) -> str:
        return f"ModuleHom({list(self.source.dims)} -> {list(self.target.dims)})"


def compose(g: ModuleHom, f: ModuleHom) -> ModuleHom:
    """``g o f``: first ``f``, then ``g``."""
    if f.target.dims != g.source.dims:
        raise ValueError("composition: target of f is not the source of g")
    return ModuleHom(f.source, g.target, [a @ b for a, b in zip(f.maps, g.maps)], check=False)


# -- constructors -----------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveSum:
    """A direct sum of indecomposable projectives e_v A, one per entry of ``tops``.

    ``labels[v-1]`` lists, in basis order, the pairs ``(copy, path)`` spanning
    the vertex-``v`` space: the path ``path`` (starting at ``tops[copy]``) in
    the ``copy``-th summand.
    """

    rep: Representation
    tops: tuple[int, ...]
    labels: tuple[tuple[tuple[int, Path], ...], ...]

    def generator_index(self, copy: int) -> int:
        v = self.tops[copy]
        return self.labels[v - 1].index((copy, trivial(v)))

    def coordinates(self, v: int, row: Sequence[int]) -> dict[int, dict[Path, int]]:
        """Split a vertex-``v`` vector into per-copy algebra coefficients."""
        out: dict[int, dict[Path, int]] = {}
        for (copy, path), c in zip(self.labels[v - 1], row):
            if c:
                out.setdefault(copy, {})[path] = int(c)
        return out


def projective_sum(algebra: MonomialAlgebra, tops: Sequence[int]) -> ProjectiveSum:
    tops = tuple(tops)
    labels: list[list[tuple[int, Path]]] = [[] for _ in algebra.quiver.vertices]
    for copy, v in enumerate(tops):
        for path in algebra.paths_from(v):
            labels[path.target - 1].append((copy, path))
    index = [{lab: k for k, lab in enumerate(ls)} for ls in labels]
    p = algebra.p
    action = {}
    for a in algebra.quiver.arrows:
        i, j = a.source - 1, a.target - 1
        m = np.zeros((len(labels[i]), len(labels[j])), dtype=np.int64)
        step = Path(a.source, a.target, (a.label,))
        for r, (copy, path) in enumerate(labels[i]):
            prod = algebra.multiply(path, step)
            if prod is not None:
                m[r, index[j][(copy, prod)]] = 1
        action[a.label] = Matrix(m, p)
    rep = Representation(algebra, [len(ls) for ls in labels], action, check=False)
    return ProjectiveSum(rep, tops, tuple(tuple(ls) for ls in labels))


def projective(algebra: MonomialAlgebra, i: int) -> Representation:
    """The indecomposable projective e_i A."""
    _check_vertex(algebra, i)
    return projective_sum(algebra, [i]).rep


def simple(algebra: MonomialAlgebra, i: int) -> Representation:
    _check_vertex(algebra, i)
    return Representation(algebra, [int(v == i) for v in algebra.quiver.vertices])


def injective(algebra: MonomialAlgebra, i: int) -> Representation:
    """The indecomposable injective D(A e_i)."""
    _check_vertex(algebra, i)
    return dual(projective(algebra.opposite, i))


def _check_vertex(algebra: MonomialAlgebra, i: int) -> None:
    if not 1 <= i <= algebra.vertex_count:
        raise ValueError(f"vertex {i} out of range 1..{algebra.vertex_count}")


def dual(m: Representation) -> Representation:
    """Vector-space dual D(M) = Hom_K(M, K), a module over the opposite algebra."""
    op = m.algebra.opposite
    return Representation(op, m.dims, {label: a.T for label, a in m.action.items()}, check=False)


def dual_hom(f: ModuleHom) -> ModuleHom:
    return ModuleHom(dual(f.target), dual(f.source), [a.T for a in f.maps], check=False)


def regular_module(algebra: MonomialAlgebra) -> Representation:
    """A as a right module over itself; vertex ``j`` has the basis paths ending at ``j``."""
    return _regular(algebra)[0]


def _regular(algebra: MonomialAlgebra) -> tuple[Representation, list[list[Path]]]:
    labels = [algebra.paths_to(j) for j in algebra.quiver.vertices]
    index = [{b: k for k, b in enumerate(ls)} for ls in labels]
    action = {}
    for a in algebra.quiver.arrows:
        i, j = a.source - 1, a.target - 1
        m = np.zeros((len(labels[i]), len(labels[j])), dtype=np.int64)
        step = Path(a.source, a.target, (a.label,))
        for r, path in enumerate(labels[i]):
            prod = algebra.multiply(path, step)
            if prod is not None:
                m[r, index[j][prod]] = 1
        action[a.label] = Matrix(m, algebra.p)
    return Representation(algebra, [len(ls) for ls in labels], action, check=False), labels


def map_from_projective(ps: ProjectiveSum, target: Representation, images: Sequence[Matrix]) -> ModuleHom:
    """The homomorphism sending the generator of copy ``k`` to ``images[k]`` (a 1 x dim row)."""
    algebra = target.algebra
    maps = []
    for v in algebra.quiver.vertices:
        rows = []
        for copy, path in ps.labels[v - 1]:
            rows.append(images[copy] @ target.path_action(path))
        maps.append(Matrix.vstack(rows, target.dim(v), target.p))
    return ModuleHom(ps.rep, target, maps, check=False)


# -- sub- and quotient modules ------------------------------------------------


def subrepresentation(m: Representation, bases: Sequence[Matrix]) -> tuple[Representation, ModuleHom]:
    """Submodule spanned by independent rows ``bases[v-1]`` (assumed arrow-stable)."""
    action = {}
    for a in m.algebra.quiver.arrows:
        i, j = a.source - 1, a.target - 1
        img = bases[i] @ m.action[a.label]
        x = solve_left(bases[j], img)
        if x is None:
            raise ValueError(f"subspace is not stable under arrow {a.label}")
        action[a.label] = x
    sub = Representation(m.algebra, [b.rows for b in bases], action, check=False)
    return sub, ModuleHom(sub, m, list(bases), check=False)


def quotient(m: Representation, bases: Sequence[Matrix]) -> tuple[Representation, ModuleHom]:
    """M / N for the submodule spanned by ``bases``; returns the projection."""
    p = m.p
    comps, projs = [], []
    for v, b in enumerate(bases):
        b = row_basis(b)
        comp = complement_rows(b)
        full = Matrix.vstack([b, comp], m.dims[v], p)
        projs.append(inverse(full).take_cols(range(b.rows, m.dims[v])))
        comps.append(comp)
    action = {}
    for a in m.algebra.quiver.arrows:
        i, j = a.source - 1, a.target - 1
        action[a.label] = comps[i] @ m.action[a.label] @ projs[j]
    q = Representation(m.algebra, [c.rows for c in comps], action, check=False)
    return q, ModuleHom(m, q, projs, check=False)


def span_closure(m: Representation, bases: Sequence[Matrix]) -> list[Matrix]:
    """Smallest arrow-stable family of subspaces containing the given rows."""
    cur = [row_basis(b) for b in bases]
    changed = True
    while changed:
        changed = False
        for a in m.algebra.quiver.arrows:
            i, j = a.source - 1, a.target - 1
            img = cur[i] @ m.action[a.label]
            if img.rows == 0:
                continue
            new = row_basis(Matrix.vstack([cur[j], img], m.dims[j], m.p))
            if new.rows > cur[j].rows:
                cur[j] = new
                changed = True
    return cur


def submodule_generated(
    m: Representation, vectors: Mapping[int, Sequence[Sequence[int]]] | Iterable[tuple[int, Sequence[int]]]
) -> tuple[Representation, ModuleHom]:
    """Smallest submodule containing the given ``(vertex, vector)`` elements."""
    items = vectors.items() if isinstance(vectors, Mapping) else [(v, [vec]) for v, vec in vectors]
    rows: list[list[list[int]]] = [[] for _ in m.dims]
    for v, vecs in items:
        for vec in vecs:
            rows[v - 1].append(list(vec))
    bases = [Matrix(r, m.p, shape=(len(r), d)) if r else Matrix.zeros(0, d, m.p) for r, d in zip(rows, m.dims)]
    return subrepresentation(m, span_closure(m, bases))


def radical(m: Representation) -> tuple[Representation, ModuleHom]:
    bases = []
    for v in m.algebra.quiver.vertices:
        imgs = [m.action[a.label] for a in m.algebra.quiver.arrows_into(v)]
        bases.append(row_basis(Matrix.vstack(imgs, m.dim(v), m.p)))
    return subrepresentation(m, bases)


def socle(m: Representation) -> tuple[Representation, ModuleHom]:
    bases = []
    for v in m.algebra.quiver.vertices:
        outs = [m.action[a.label] for a in m.algebra.quiver.arrows_from(v)]
        bases.append(kernel_basis(Matrix.hstack(outs, m.dim(v), m.p)))
    return subrepresentation(m, bases)


def top(m: Representation) -> tuple[Representation, ModuleHom]:
    _, inc = radical(m)
    return quotient(m, inc.maps)


def kernel(f: ModuleHom) -> tuple[Representation, ModuleHom]:
    return subrepresentation(f.source, [kernel_basis(a) for a in f.maps])


def image(f: ModuleHom) -> tuple[Representation, ModuleHom]:
    return subrepresentation(f.target, [row_basis(a) for a in f.maps])


def cokernel(f: ModuleHom) -> tuple[Representation, ModuleHom]:
    return quotient(f.target, [row_basis(a) for a in f.maps])


def corestrict(f: ModuleHom, inclusion: ModuleHom) -> ModuleHom:
    """Factor ``f`` through a monomorphism ``inclusion`` whose image contains image(f)."""
    maps = []
    for a, b in zip(f.maps, inclusion.maps):
        x = solve_left(b, a)
        if x is None:
            raise ValueError("image of f is not contained in the submodule")
        maps.append(x)
    return ModuleHom(f.source, inclusion.source, maps, check=False)


def factor_through_epi(g: ModuleHom, epi: ModuleHom) -> ModuleHom:
    """The map ``h`` with ``h o epi == g``, for ``g`` vanishing on ker(epi)."""
    maps = []
    for e, a in zip(epi.maps, g.maps):
        lift = solve_left(e, Matrix.identity(e.cols, e.p))
        if lift is None:
            raise ValueError("not an epimorphism")
        maps.append(lift @ a)
    h = ModuleHom(epi.target, g.target, maps, check=False)
    if compose(h, epi) != g:
        raise ValueError("map does not vanish on the kernel of the epimorphism")
    return h


def quotient_by_right_ideal(algebra: MonomialAlgebra, gens: Iterable[AlgebraElement]) -> Representation:
    """The right module A / sum(g A)."""
    reg, labels = _regular(algebra)
    vectors: list[tuple[int, list[int]]] = []
    for g in gens:
        for j, ls in enumerate(labels, start=1):
            vec = [g.coeffs.get(b, 0) for b in ls]
            if any(vec):
                vectors.append((j, vec))
    sub, inc = submodule_generated(reg, vectors)
    return quotient(reg, inc.maps)[0]


def quotient_of_projective(algebra: MonomialAlgebra, i: int, gens: Iterable[AlgebraElement]) -> Representation:
    """The cyclic module e_i A / sum(g A) for elements ``g`` of e_i A."""
    _check_vertex(algebra, i)
    ps = projective_sum(algebra, [i])
    vectors: list[tuple[int, list[int]]] = []
    for g in gens:
        stray = [b for b in g.coeffs if b.source != i]
        if stray:
            raise ValueError(f"{stray[0]} does not start at vertex {i}")
        for j, ls in enumerate(ps.labels, start=1):
            vec = [g.coeffs.get(path, 0) for _, path in ls]
            if any(vec):
                vectors.append((j, vec))
    _, inc = submodule_generated(ps.rep, vectors)
    return quotient(ps.rep, inc.maps)[0]


def direct_sum(mods: Sequence[Representation], algebra: MonomialAlgebra | None = None):
    """Direct sum with its inclusions and projections.

    Returns ``(sum, inclusions, projections)``.
    """
    mods = list(mods)
    if not mods:
        if algebra is None:
            raise ValueError("empty direct sum needs an explicit algebra")
        z = zero_module(algebra)
        return z, [], []
    algebra = mods[0].algebra
    p = algebra.p
    if any(m.algebra != algebra for m in mods):
        raise ValueError("direct sum of modules over different algebras")
    dims = [sum(m.dims[v] for m in mods) for v in range(algebra.vertex_count)]
    action = {
        a.label: Matrix.block_diag([m.action[a.label] for m in mods], p) for a in algebra.quiver.arrows
    }
    total = Representation(algebra, dims, action, check=False)
    incs, projs = [], []
    offsets = [0] * algebra.vertex_count
    for m in mods:
        inc_maps, proj_maps = [], []
        for v in range(algebra.vertex_count):
            d, off = m.dims[v], offsets[v]
            e = np.zeros((d, dims[v]), dtype=np.int64)
            e[np.arange(d), off + np.arange(d)] = 1
            inc_maps.append(Matrix(e, p))
            proj_maps.append(Matrix(e.T, p))
            offsets[v] += d
        incs.append(ModuleHom(m, total, inc_maps, check=False))
        projs.append(ModuleHom(total, m, proj_maps, check=False))
    return total, incs, projs


def direct_sum_module(*mods: Representation) -> Representation:
    return direct_sum(mods)[0]


# -- Hom spaces ----------------------------------------------------------------


def hom_space(m: Representation, n: Representation) -> Matrix:
    """Basis of Hom(M, N), one vectorised homomorphism per row."""
    if m.algebra != n.algebra:
        raise ValueError("Hom between modules over different algebras")
    p = m.p
    sizes = [a * b for a, b in zip(m.dims, n.dims)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offs[-1])
    blocks = []
    for a in m.algebra.quiver.arrows:
        i, j = a.source - 1, a.target - 1
        ncols = m.dims[i] * n.dims[j]
        c = np.zeros((total, ncols), dtype=np.int64)
        # F_i @ N_a
        c[offs[i]:offs[i + 1]] += np.kron(np.eye(m.dims[i], dtype=np.int64), n.action[a.label].array)
        # - M_a @ F_j
        c[offs[j]:offs[j + 1]] -= np.kron(m.action[a.label].array.T, np.eye(n.dims[j], dtype=np.int64))
        blocks.append(c)
    if not blocks:
        return Matrix.identity(total, p)
    return kernel_basis(Matrix(np.hstack(blocks), p))


def hom_basis(m: Representation, n: Representation) -> list[ModuleHom]:
    basis = hom_space(m, n)
    return [ModuleHom.from_vector(m, n, row) for row in basis.tolist()]


def hom_dim(m: Representation, n: Representation) -> int:
    return hom_space(m, n).rows
