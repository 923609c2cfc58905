"""Quivers, paths and finite-dimensional monomial path algebras KQ/I.

Paths compose left to right: for arrows ``x: 1 -> 1`` and ``y: 1 -> 2`` the
word ``xy`` is the path ``1 -> 1 -> 2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InfiniteDimensional, InvalidRelation
from .linalg import Matrix, PrimeField, row_basis

DEFAULT_BASIS_BOUND = 10**6


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        seen = set()
        for a in self.arrows:
            if not a.label:
                raise ValueError("arrow labels must be nonempty")
            if a.label in seen:
                raise ValueError(f"duplicate arrow label {a.label!r}")
            seen.add(a.label)
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise ValueError(f"arrow {a.label!r}: vertex {v} out of range 1..{self.vertex_count}")

    @classmethod
    def from_triples(cls, vertex_count: int, triples: Iterable[tuple[str, int, int]]) -> Quiver:
        return cls(vertex_count, tuple(Arrow(l, s, t) for l, s, t in triples))

    @cached_property
    def arrow(self) -> Mapping[str, Arrow]:
        return {a.label: a for a in self.arrows}

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> Quiver:
        return Quiver(self.vertex_count, tuple(Arrow(a.label, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(self.arrows)


def trivial(v: int) -> Path:
    return Path(v, v, ())


def make_path(quiver: Quiver, labels: Iterable[str]) -> Path:
    """Path from a word of arrow labels; raises InvalidRelation when not composable."""
    labels = tuple(labels)
    if not labels:
        raise InvalidRelation("empty word")
    for l in labels:
        if l not in quiver.arrow:
            raise InvalidRelation(f"unknown arrow {l!r}")
    for a, b in zip(labels, labels[1:]):
        if quiver.arrow[a].target != quiver.arrow[b].source:
            raise InvalidRelation(f"arrows {a!r} and {b!r} do not compose")
    return Path(quiver.arrow[labels[0]].source, quiver.arrow[labels[-1]].target, labels)


def _contains(word: tuple[str, ...], sub: tuple[str, ...]) -> bool:
    n = len(sub)
    return any(word[i:i + n] == sub for i in range(len(word) - n + 1))


@dataclass(frozen=True, eq=False)
class MonomialAlgebra:
    """A = KQ/I with I generated by paths of length >= 2.

    The basis is every path avoiding all relations as consecutive subwords,
    ordered by length and then lexicographically by arrow labels (trivial
    paths first, by vertex).
    """

    quiver: Quiver
    relations: tuple[Path, ...]
    field: PrimeField = PrimeField(3)
    name: str = "A"
    basis_bound: int = DEFAULT_BASIS_BOUND
    basis: tuple[Path, ...] = dc_field(init=False, repr=False)

    def __post_init__(self) -> None:
        for r in self.relations:
            if r.length < 2:
                raise InvalidRelation(f"relation {r} has length < 2")
            make_path(self.quiver, r.arrows)
        object.__setattr__(self, "basis", _enumerate_basis(self.quiver, self.relations, self.basis_bound))

    def _key(self):
        return (self.quiver, frozenset(r.arrows for r in self.relations), self.field.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialAlgebra):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @cached_property
    def basis_index(self) -> Mapping[Path, int]:
        return {b: i for i, b in enumerate(self.basis)}

    def paths_between(self, i: int, j: int) -> list[Path]:
        """Basis paths from ``i`` to ``j``, i.e. a basis of e_i A e_j."""
        return [b for b in self.basis if b.source == i and b.target == j]

    def paths_from(self, i: int) -> list[Path]:
        return [b for b in self.basis if b.source == i]

    def paths_to(self, j: int) -> list[Path]:
        return [b for b in self.basis if b.target == j]

    def path(self, *labels: str) -> Path:
        return make_path(self.quiver, labels)

    def multiply(self, p: Path, q: Path) -> Path | None:
        """The product ``p*q`` as a basis path, or None when it is zero."""
        if p.target != q.source:
            return None
        word = p.arrows + q.arrows
        if any(_contains(word, r.arrows) for r in self.relations):
            return None
        return Path(p.source, q.target, word)

    def reverse(self, p: Path) -> Path:
        """The path ``p`` read backwards, a path of the opposite algebra."""
        return Path(p.target, p.source, tuple(reversed(p.arrows)))

    @cached_property
    def opposite(self) -> MonomialAlgebra:
        op = MonomialAlgebra(
            self.quiver.opposite(),
            tuple(self.reverse(r) for r in self.relations),
            self.field,
            name=f"{self.name}^op",
            basis_bound=self.basis_bound,
        )
        # make opposite an involution on objects, not just up to equality
        op.__dict__["opposite"] = self
        return op

    def element(self, terms: Mapping[Path, int] | Iterable[tuple[Path, int]]) -> AlgebraElement:
        return AlgebraElement.from_terms(self, terms)

    def vertex_idempotent(self, v: int) -> AlgebraElement:
        return AlgebraElement.from_terms(self, {trivial(v): 1})

    def with_field(self, field: PrimeField) -> MonomialAlgebra:
        return MonomialAlgebra(self.quiver, self.relations, field, self.name, self.basis_bound)


def _allowed(word: tuple[str, ...], rels_by_last: Mapping[str, list[tuple[str, ...]]]) -> bool:
    return not any(word[-len(r):] == r for r in rels_by_last.get(word[-1], ()))


def _has_unbounded_paths(quiver: Quiver, rels_by_last: Mapping[str, list[tuple[str, ...]]]) -> bool:
    """Cycle search on the graph of allowed words of length L-1 (L the longest relation)."""
    k = max((len(r) for rs in rels_by_last.values() for r in rs), default=2) - 1
    layer = [(a.label,) for a in quiver.arrows]
    for _ in range(k - 1):
        layer = [
            w + (a.label,)
            for w in layer
            for a in quiver.arrows_from(quiver.arrow[w[-1]].target)
            if _allowed(w + (a.label,), rels_by_last)
        ]

    def successors(w):
        for a in quiver.arrows_from(quiver.arrow[w[-1]].target):
            if _allowed(w + (a.label,), rels_by_last):
                yield (w + (a.label,))[1:]

    state: dict[tuple[str, ...], int] = {}  # 1 on stack, 2 finished
    for root in layer:
        if root in state:
            continue
        state[root] = 1
        stack = [(root, successors(root))]
        while stack:
            w, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[w] = 2
                stack.pop()
            elif state.get(nxt) == 1:
                return True
            elif nxt not in state:
                state[nxt] = 1
                stack.append((nxt, successors(nxt)))
    return False


def _enumerate_basis(quiver: Quiver, relations: tuple[Path, ...], bound: int) -> tuple[Path, ...]:
    # breadth-first extension; a relation can only appear as a suffix of a newly extended path
    rels_by_last: dict[str, list[tuple[str, ...]]] = {}
    for r in relations:
        rels_by_last.setdefault(r.arrows[-1], []).append(r.arrows)
    if _has_unbounded_paths(quiver, rels_by_last):
        raise InfiniteDimensional("the relations do not bound path length (an allowed cycle exists)")
    found = [trivial(v) for v in quiver.vertices]
    queue = deque(found)
    while queue:
        cur = queue.popleft()
        for a in quiver.arrows_from(cur.target):
            word = cur.arrows + (a.label,)
            if not _allowed(word, rels_by_last):
                continue
            nxt = Path(cur.source, a.target, word)
            found.append(nxt)
            if len(found) > bound:
                raise InfiniteDimensional(
                    f"more than {bound} basis paths; the relations do not bound path length"
                )
            queue.append(nxt)
    found.sort(key=lambda b: (b.length, b.arrows, b.source))
    return tuple(found)


def build_algebra(
    quiver: Quiver,
    relations: Iterable[Iterable[str] | Path],
    field: PrimeField | int = 3,
    name: str = "A",
    basis_bound: int = DEFAULT_BASIS_BOUND,
) -> MonomialAlgebra:
    if isinstance(field, int):
        field = PrimeField(field)
    rels = []
    for r in relations:
        if isinstance(r, Path):
            rels.append(r)
            continue
        word = tuple(r)
        if len(word) < 2:
            raise InvalidRelation(f"relation {'*'.join(word)!r} has length < 2")
        rels.append(make_path(quiver, word))
    return MonomialAlgebra(quiver, tuple(rels), field, name, basis_bound)


def example_algebra(p: int = 3) -> MonomialAlgebra:
    """Two vertices, x: 1->1, y: 1->2, z: 2->1, relations xy, yz, zx, x^3."""
    q = Quiver.from_triples(2, [("x", 1, 1), ("y", 1, 2), ("z", 2, 1)])
    return build_algebra(q, [("x", "y"), ("y", "z"), ("z", "x"), ("x", "x", "x")], p)


class AlgebraElement:
    """A linear combination of basis paths."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: MonomialAlgebra, coeffs: Mapping[Path, int]):
        p = algebra.p
        self.algebra = algebra
        self.coeffs = {b: c % p for b, c in coeffs.items() if c % p}
        for b in self.coeffs:
            if b not in algebra.basis_index:
                raise ValueError(f"{b} is not a basis path")

    @classmethod
    def from_terms(cls, algebra, terms) -> AlgebraElement:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, int] = {}
        for path, c in items:
            if algebra.multiply(trivial(path.source), path) is None:
                continue  # path contains a relation: zero in A
            acc[path] = acc.get(path, 0) + c
        return cls(algebra, acc)

    @classmethod
    def from_vector(cls, algebra: MonomialAlgebra, vec: Iterable[int]) -> AlgebraElement:
        return cls(algebra, {algebra.basis[i]: int(c) for i, c in enumerate(vec) if c})

    def vector(self) -> list[int]:
        v = [0] * self.algebra.dimension
        for b, c in self.coeffs.items():
            v[self.algebra.basis_index[b]] = c
        return v

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        acc = dict(self.coeffs)
        for b, c in other.coeffs.items():
            acc[b] = acc.get(b, 0) + c
        return AlgebraElement(self.algebra, acc)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: int) -> AlgebraElement:
        return AlgebraElement(self.algebra, {b: c * v for b, v in self.coeffs.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        acc: dict[Path, int] = {}
        for b1, c1 in self.coeffs.items():
            for b2, c2 in other.coeffs.items():
                prod = self.algebra.multiply(b1, b2)
                if prod is not None:
                    acc[prod] = acc.get(prod, 0) + c1 * c2
        return AlgebraElement(self.algebra, acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        order = self.algebra.basis_index
        parts = []
        for b in sorted(self.coeffs, key=order.__getitem__):
            c = self.coeffs[b]
            parts.append(str(b) if c == 1 else f"{c}*{b}")
        return " + ".join(parts)


def right_ideal_basis(algebra: MonomialAlgebra, gens: Iterable[AlgebraElement]) -> list[AlgebraElement]:
    """Reduced basis of the right ideal generated by ``gens``."""
    rows = []
    units = [AlgebraElement(algebra, {b: 1}) for b in algebra.basis]
    for g in gens:
        for u in units:
            rows.append((g * u).vector())
    if not rows:
        return []
    m = row_basis(Matrix(rows, algebra.p))
    return [AlgebraElement.from_vector(algebra, r) for r in m.tolist()]
