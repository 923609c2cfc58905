"""Krull-Schmidt machinery: indecomposability, decomposition, isomorphism.

Every positive answer carries a witness.  Indecomposability is certified
either by a *local certificate* (End(M) = K*1 + J with J a nilpotent
subspace, so End(M) has no idempotents besides 0 and 1) or by exhausting
End(M).  A splitting is certified by a Fitting endomorphism: a map that is
neither invertible nor nilpotent splits M as ker(f^N) + im(f^N).

Non-isomorphism of indecomposables M, N is decided exactly: with a local
certificate for M, the two are isomorphic iff some composite
M -> N -> M falls outside J.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InconclusiveDecomposition, InconclusiveIsomorphism
from .linalg import Matrix, inverse, kernel_basis, row_basis, solve_left
from .repmod import (
    ModuleHom,
    Representation,
    compose,
    direct_sum,
    hom_space,
    subrepresentation,
)

EXHAUSTIVE_LIMIT = 10**6
DEFAULT_BUDGET = 256
_BRUTE_EIGEN_LIMIT = 256


# -- endomorphism helpers -------------------------------------------------------


def _eigenvalues(f: ModuleHom) -> list[int]:
    """Eigenvalues in GF(p) of an endomorphism, over all vertices."""
    p = f.source.p
    found: set[int] = set()
    for m in f.maps:
        n = m.rows
        if n == 0:
            continue
        if p <= _BRUTE_EIGEN_LIMIT:
            ident = Matrix.identity(n, p)
            found.update(lam for lam in range(p) if (m - ident.scale(lam)).rank() < n)
        else:
            import sympy

            t = sympy.Symbol("t")
            poly = sympy.Poly(sympy.Matrix(m.tolist()).charpoly(t).as_expr(), t, modulus=p)
            found.update(int(r) % p for r in poly.ground_roots())
    return sorted(found)


def _shift(f: ModuleHom, lam: int) -> ModuleHom:
    p = f.source.p
    return ModuleHom(
        f.source, f.target, [m - Matrix.identity(m.rows, p).scale(lam) for m in f.maps], check=False
    )


def _power_rank(f: ModuleHom, k: int) -> int:
    return sum(m.power(k).rank() for m in f.maps)


def _is_nilpotent(f: ModuleHom) -> bool:
    n = f.source.dimension
    return all(m.power(n).is_zero() for m in f.maps)


def _splits(f: ModuleHom) -> ModuleHom | None:
    """A shift f - lam that is neither invertible nor nilpotent, if any."""
    n = f.source.dimension
    for lam in _eigenvalues(f):
        g = _shift(f, lam)
        r = _power_rank(g, n)
        if 0 < r < n:
            return g
    return None


def _combine(m: Representation, basis: Matrix, coeffs: Sequence[int]) -> ModuleHom:
    vec = Matrix([list(coeffs)], m.p, shape=(1, basis.rows)) @ basis
    return ModuleHom.from_vector(m, m, vec.tolist()[0])


def _vec(f: ModuleHom) -> Matrix:
    v = f.vector()
    return Matrix([v], f.source.p, shape=(1, len(v)))


@dataclass(frozen=True)
class LocalCertificate:
    """End(M) = K*1 + J with J nilpotent, given by the value of the residue map on a basis."""

    end_basis: Matrix
    residues: tuple[int, ...]

    def residue(self, f: ModuleHom) -> int:
        coords = solve_left(self.end_basis, _vec(f))
        if coords is None:
            raise ValueError("not an endomorphism of the certified module")
        p = self.end_basis.p
        return sum(c * r for c, r in zip(coords.tolist()[0], self.residues)) % p


def local_certificate(m: Representation, end_basis: Matrix | None = None) -> LocalCertificate | None:
    """Try to certify that End(M) is local with residue field GF(p)."""
    if m.dimension == 0:
        return None
    if end_basis is None:
        end_basis = hom_space(m, m)
    p = m.p
    residues = []
    radical_rows = []
    for row in end_basis.tolist():
        f = ModuleHom.from_vector(m, m, row)
        eig = _eigenvalues(f)
        if len(eig) != 1:
            return None
        g = _shift(f, eig[0])
        if not _is_nilpotent(g):
            return None
        residues.append(eig[0])
        radical_rows.append(g.vector())
    width = end_basis.cols
    rad = row_basis(Matrix(radical_rows, p, shape=(len(radical_rows), width)))
    if rad.rows != end_basis.rows - 1:
        return None
    rad_homs = [ModuleHom.from_vector(m, m, r) for r in rad.tolist()]
    power = rad
    for _ in range(m.dimension + 1):
        if power.rows == 0:
            return LocalCertificate(end_basis, tuple(residues))
        prods = [
            compose(j, ModuleHom.from_vector(m, m, s)).vector()
            for s in power.tolist()
            for j in rad_homs
        ]
        power = row_basis(Matrix(prods, p, shape=(len(prods), width)))
    return None


# -- classification of a single module -------------------------------------------


def _candidates(m: Representation, basis: Matrix, rng: random.Random, budget: int) -> Iterator[ModuleHom]:
    d = basis.rows
    for k in range(d):
        yield ModuleHom.from_vector(m, m, basis.tolist()[k])
    for i, j in itertools.combinations(range(d), 2):
        c = [0] * d
        c[i] = c[j] = 1
        yield _combine(m, basis, c)
    for _ in range(budget):
        yield _combine(m, basis, [rng.randrange(m.p) for _ in range(d)])


def _exhaustive_idempotent(m: Representation, basis: Matrix) -> ModuleHom | None:
    ident = ModuleHom.identity(m)
    for coeffs in itertools.product(range(m.p), repeat=basis.rows):
        if not any(coeffs):
            continue
        e = _combine(m, basis, coeffs)
        if e != ident and compose(e, e) == e:
            return e
    return None


@dataclass
class _Verdict:
    indecomposable: bool
    certificate: LocalCertificate | None = None
    splitter: ModuleHom | None = None


def _classify(m: Representation, rng: random.Random, budget: int) -> _Verdict:
    if m.dimension == 0:
        raise ValueError("the zero module is neither decomposable nor indecomposable")
    basis = hom_space(m, m)
    cert = local_certificate(m, basis)
    if cert is not None:
        return _Verdict(True, certificate=cert)
    for f in _candidates(m, basis, rng, budget):
        g = _splits(f)
        if g is not None:
            return _Verdict(False, splitter=g)
    if m.p ** basis.rows <= EXHAUSTIVE_LIMIT:
        e = _exhaustive_idempotent(m, basis)
        if e is None:
            return _Verdict(True)
        return _Verdict(False, splitter=e)
    raise InconclusiveDecomposition(
        f"no splitting endomorphism found within budget {budget} and End has dimension {basis.rows}"
    )


def is_indecomposable(m: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> bool:
    return _classify(m, random.Random(seed), budget).indecomposable


def fitting_split(f: ModuleHom):
    """Split M = ker(f^N) + im(f^N); returns ``[(summand, inclusion, projection), ...]``."""
    m = f.source
    n = m.dimension
    powers = [a.power(n) for a in f.maps]
    ker_b = [kernel_basis(a) for a in powers]
    im_b = [row_basis(a) for a in powers]
    kmod, kinc = subrepresentation(m, ker_b)
    imod, iinc = subrepresentation(m, im_b)
    kproj, iproj = [], []
    for v, (kb, ib) in enumerate(zip(ker_b, im_b)):
        inv = inverse(Matrix.vstack([kb, ib], m.dims[v], m.p))
        kproj.append(inv.take_cols(range(kb.rows)))
        iproj.append(inv.take_cols(range(kb.rows, m.dims[v])))
    return [
        (kmod, kinc, ModuleHom(m, kmod, kproj, check=False)),
        (imod, iinc, ModuleHom(m, imod, iproj, check=False)),
    ]


# -- decomposition ---------------------------------------------------------------


@dataclass
class _Leaf:
    rep: Representation
    inclusion: ModuleHom
    projection: ModuleHom
    certificate: LocalCertificate | None


@dataclass
class Decomposition:
    """Indecomposable summands with multiplicities.

    ``witnesses[k]`` holds one ``(inclusion, projection)`` pair per copy of
    ``summands[k][0]``, realising it as a direct summand of ``module``.
    """

    module: Representation
    summands: list[tuple[Representation, int]]
    witnesses: list[list[tuple[ModuleHom, ModuleHom]]]
    certificates: list[LocalCertificate | None] = field(default_factory=list, repr=False)

    def __len__(self) -> int:
        return sum(k for _, k in self.summands)

    def flat(self) -> list[Representation]:
        return [r for r, k in self.summands for _ in range(k)]

    def dims(self) -> list[tuple[list[int], int]]:
        return [(list(r.dims), k) for r, k in self.summands]

    def verify(self) -> bool:
        """Check projection o inclusion == identity and cross terms vanish."""
        pairs = [w for ws in self.witnesses for w in ws]
        for a, (inc_a, _) in enumerate(pairs):
            for b, (_, proj_b) in enumerate(pairs):
                c = compose(proj_b, inc_a)
                if a == b and c != ModuleHom.identity(inc_a.source):
                    return False
                if a != b and not c.is_zero():
                    return False
        total = sum(inc.source.dimension for inc, _ in pairs)
        return total == self.module.dimension


def _split_leaves(m: Representation, rng: random.Random, budget: int) -> list[_Leaf]:
    out = []
    stack = [(m, ModuleHom.identity(m), ModuleHom.identity(m))]
    while stack:
        rep, inc, proj = stack.pop()
        if rep.dimension == 0:
            continue
        verdict = _classify(rep, rng, budget)
        if verdict.indecomposable:
            out.append(_Leaf(rep, inc, proj, verdict.certificate))
            continue
        parts = fitting_split(verdict.splitter)
        # push in reverse so the kernel part is processed first
        for sub, sinc, sproj in reversed(parts):
            stack.append((sub, compose(inc, sinc), compose(sproj, proj)))
    return out


def _canonical_key(r: Representation) -> tuple:
    h = hashlib.sha256()
    for a in r.algebra.quiver.arrows:
        h.update(a.label.encode())
        h.update(repr(r.action[a.label].tolist()).encode())
    return (list(r.dims), h.hexdigest())


def decompose(m: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> Decomposition:
    rng = random.Random(seed)
    leaves = _split_leaves(m, rng, budget)
    groups: list[_Leaf] = []
    members: list[list[tuple[ModuleHom, ModuleHom]]] = []
    for leaf in leaves:
        for g, ws in zip(groups, members):
            iso = _iso_indecomposables(g.rep, g.certificate, leaf.rep, rng, budget)
            if iso is not None:
                ws.append((compose(leaf.inclusion, iso), compose(iso.inverse(), leaf.projection)))
                break
        else:
            groups.append(leaf)
            members.append([(leaf.inclusion, leaf.projection)])
    order = sorted(range(len(groups)), key=lambda k: _canonical_key(groups[k].rep))
    return Decomposition(
        m,
        [(groups[k].rep, len(members[k])) for k in order],
        [members[k] for k in order],
        [groups[k].certificate for k in order],
    )


# -- isomorphism -------------------------------------------------------------------


def _random_iso(m, n, basis: Matrix, rng: random.Random, budget: int) -> ModuleHom | None:
    rows = basis.tolist()
    for row in rows:
        f = ModuleHom.from_vector(m, n, row)
        if f.is_isomorphism():
            return f
    for _ in range(budget if rows else 0):
        c = Matrix([[rng.randrange(m.p) for _ in rows]], m.p, shape=(1, len(rows)))
        f = ModuleHom.from_vector(m, n, (c @ basis).tolist()[0])
        if f.is_isomorphism():
            return f
    return None


def _exhaustive_iso(m, n, basis: Matrix) -> ModuleHom | None:
    for coeffs in itertools.product(range(m.p), repeat=basis.rows):
        c = Matrix([list(coeffs)], m.p, shape=(1, basis.rows))
        f = ModuleHom.from_vector(m, n, (c @ basis).tolist()[0])
        if f.is_isomorphism():
            return f
    return None


def _iso_indecomposables(
    a: Representation,
    cert: LocalCertificate | None,
    b: Representation,
    rng: random.Random,
    budget: int,
) -> ModuleHom | None:
    """An isomorphism a -> b of indecomposables, or None if none exists."""
    if a.dims != b.dims:
        return None
    fwd = hom_space(a, b)
    if cert is not None:
        back = [ModuleHom.from_vector(b, a, r) for r in hom_space(b, a).tolist()]
        for row in fwd.tolist():
            f = ModuleHom.from_vector(a, b, row)
            if any(cert.residue(compose(g, f)) for g in back):
                return f
        return None
    f = _random_iso(a, b, fwd, rng, budget)
    if f is not None:
        return f
    if a.p ** fwd.rows <= EXHAUSTIVE_LIMIT:
        return _exhaustive_iso(a, b, fwd)
    raise InconclusiveIsomorphism("isomorphism search budget exhausted")


def _match(
    small: Decomposition, big: Decomposition, rng: random.Random, budget: int, exact: bool
) -> bool:
    """Does the summand multiset of ``small`` embed in (or, if exact, equal) that of ``big``?"""
    used = [0] * len(big.summands)
    for (rep, k), cert in zip(small.summands, small.certificates):
        for j, ((brep, bk), bcert) in enumerate(zip(big.summands, big.certificates)):
            if rep.dims != brep.dims:
                continue
            if cert is None and bcert is not None:
                iso = _iso_indecomposables(brep, bcert, rep, rng, budget)
            else:
                iso = _iso_indecomposables(rep, cert, brep, rng, budget)
            if iso is not None:
                if (bk != k) if exact else (bk < k):
                    return False
                used[j] = k
                break
        else:
            return False
    return not exact or all(u == k for u, (_, k) in zip(used, big.summands))


def find_isomorphism(m: Representation, n: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> ModuleHom | None:
    """A witness isomorphism from a direct search, or None when search alone fails."""
    if m.dims != n.dims:
        return None
    return _random_iso(m, n, hom_space(m, n), random.Random(seed), budget)


def is_isomorphic(m: Representation, n: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> bool:
    if m.algebra != n.algebra:
        raise ValueError("modules over different algebras")
    if m.dims != n.dims:
        return False
    if m.dimension == 0:
        return True
    hmn = hom_space(m, n)
    if not (hmn.rows == hom_space(m, m).rows == hom_space(n, n).rows):
        return False
    rng = random.Random(seed)
    if _random_iso(m, n, hmn, rng, budget) is not None:
        return True
    try:
        dm = decompose(m, seed, budget)
        dn = decompose(n, seed, budget)
        return len(dm) == len(dn) and _match(dm, dn, rng, budget, exact=True)
    except (InconclusiveDecomposition, InconclusiveIsomorphism):
        pass
    if m.p ** hmn.rows <= EXHAUSTIVE_LIMIT:
        return _exhaustive_iso(m, n, hmn) is not None
    raise InconclusiveIsomorphism(
        f"no isomorphism found within budget {budget}; Hom dimensions agree ({hmn.rows})"
    )


def is_direct_summand(x: Representation, y: Representation, seed: int = 0, budget: int = DEFAULT_BUDGET) -> bool:
    """Is every indecomposable summand of ``x`` (with multiplicity) a summand of ``y``?"""
    if x.algebra != y.algebra:
        raise ValueError("modules over different algebras")
    if x.dimension == 0:
        return True
    if any(a > b for a, b in zip(x.dims, y.dims)):
        return False
    return _match(decompose(x, seed, budget), decompose(y, seed, budget), random.Random(seed), budget, exact=False)


def summand_multiplicity(x: Representation, d: Decomposition, seed: int = 0, budget: int = DEFAULT_BUDGET) -> int:
    """How often the indecomposable ``x`` occurs in the decomposition ``d``."""
    rng = random.Random(seed)
    dx = decompose(x, seed, budget)
    if len(dx) != 1:
        raise ValueError("expected an indecomposable module")
    rep, cert = dx.summands[0][0], dx.certificates[0]
    for (brep, k), bcert in zip(d.summands, d.certificates):
        if brep.dims != rep.dims:
            continue
        if _iso_indecomposables(rep, cert, brep, rng, budget) is not None:
            return k
    return 0


def reassemble(d: Decomposition) -> Representation:
    return direct_sum(d.flat(), d.module.algebra)[0]
