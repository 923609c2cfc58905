"""End-to-end check that tau(Omega^2(mod A)) fails to be extension-closed.

The recipe: take M1 = A/(x+z)A and M2 = P2/soc(P2), confirm both lie in
tau(Omega^2), build the non-split extension 0 -> M1 -> W -> M2 -> 0, split
W = P2 + U and show that tau^-1(U) is not a second syzygy, so U and hence
W lie outside the subcategory.  On algebras where the recipe does not apply
a small pool of modules is searched instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import dsl
from .algebra import MonomialAlgebra
from .decomp import decompose, is_indecomposable, is_isomorphic
from .errors import DSLError, InconclusiveDecomposition, InconclusiveIsomorphism
from .homology import (
    ext1_basis,
    extension_from_class,
    in_tau_omega,
    is_projective,
    nth_syzygy_test,
    tau_inverse,
    tau_n,
    tau_omega_test,
)
from .repmod import Representation, projective, radical, simple, injective, socle, cokernel

CONFIRMED = "counterexample confirmed"
NOT_CONFIRMED = "not confirmed"
NOT_FOUND = "no counterexample found"
INCONCLUSIVE = "inconclusive"

DEFAULT_RECIPE = ("quot(x + z)", "socquot(P(2))")

NOTES = [
    "Tr(C) is read as closed under direct summands; membership in tau(Omega^i) is tested "
    "summand-wise by the criterion 'X is a summand of P + Omega^i(Omega^-i(X))'.",
    "Injective modules (duals of projective A^op-modules) belong to tau(Omega^i) by definition.",
]


@dataclass
class Check:
    name: str
    status: str = "pass"
    detail: str = ""
    dims: dict[str, list[int]] = field(default_factory=dict)
    summands: dict[str, list[dict[str, Any]]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "dims": self.dims,
            "summands": self.summands,
        }


@dataclass
class VerifierReport:
    algebra: MonomialAlgebra
    seed: int
    recipe: str
    checks: list[Check] = field(default_factory=list)
    verdict: str = NOT_CONFIRMED
    modules: dict[str, Representation] = field(default_factory=dict, repr=False)

    @property
    def confirmed(self) -> bool:
        return self.verdict == CONFIRMED

    def exit_code(self) -> int:
        return {CONFIRMED: 0, INCONCLUSIVE: 3}.get(self.verdict, 1)

    def to_dict(self) -> dict[str, Any]:
        a = self.algebra
        return {
            "algebra": {
                "name": a.name,
                "field": f"GF({a.p})",
                "vertices": a.vertex_count,
                "dimension": a.dimension,
                "basis": [str(b) for b in a.basis],
            },
            "seed": self.seed,
            "recipe": self.recipe,
            "checks": [c.to_dict() for c in self.checks],
            "verdict": self.verdict,
            "notes": NOTES,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        a = self.algebra
        out = [f"algebra {a.name} over GF({a.p}), dimension {a.dimension}; recipe: {self.recipe}"]
        for k, c in enumerate(self.checks, start=1):
            out.append(f"[{c.status.upper():>12}] {k}. {c.name}: {c.detail}")
            for name, d in c.dims.items():
                out.append(f"{'':16}{name}: {d}")
            for name, ss in c.summands.items():
                parts = " + ".join(
                    f"{s['dims']}" + (f"^{s['multiplicity']}" if s["multiplicity"] > 1 else "") for s in ss
                )
                out.append(f"{'':16}{name} = {parts or '0'}")
        out.append(f"verdict: {self.verdict}")
        return "\n".join(out)


def _summary(d) -> list[dict[str, Any]]:
    return [{"dims": list(r.dims), "multiplicity": k} for r, k in d.summands]


class _Stop(Exception):
    def __init__(self, verdict: str):
        self.verdict = verdict


def _pool(algebra: MonomialAlgebra) -> list[tuple[str, Representation]]:
    out = []
    for v in algebra.quiver.vertices:
        p = projective(algebra, v)
        out += [(f"S({v})", simple(algebra, v)), (f"P({v})", p), (f"I({v})", injective(algebra, v))]
        out.append((f"rad(P({v}))", radical(p)[0]))
        out.append((f"socquot(P({v}))", cokernel(socle(p)[1])[0]))
    return [(n, m) for n, m in out if m.dimension]


def verify_counterexample(
    algebra: MonomialAlgebra,
    seed: int = 0,
    m1_expr: str | None = None,
    m2_expr: str | None = None,
) -> VerifierReport:
    """Run the recipe and return a report; never raises for mathematical outcomes."""
    custom = m1_expr is not None or m2_expr is not None
    exprs = (m1_expr or DEFAULT_RECIPE[0], m2_expr or DEFAULT_RECIPE[1])
    report = VerifierReport(algebra, seed, "custom" if custom else "default")
    try:
        _run(report, exprs, custom)
        report.verdict = CONFIRMED
    except _Stop as stop:
        report.verdict = stop.verdict
    except (InconclusiveDecomposition, InconclusiveIsomorphism) as exc:
        report.checks.append(Check("inconclusive", "inconclusive", str(exc)))
        report.verdict = INCONCLUSIVE
    return report


def _require(report: VerifierReport, check: Check, ok: bool, verdict: str = NOT_CONFIRMED) -> None:
    check.status = "pass" if ok else "fail"
    report.checks.append(check)
    if not ok:
        raise _Stop(verdict)


def _run(report: VerifierReport, exprs: tuple[str, str], custom: bool) -> None:
    A = report.algebra
    seed = report.seed
    mods = report.modules

    # 1. the two end terms
    chk = Check("build-modules")
    try:
        m1 = dsl.eval_module(A, exprs[0])
        m2 = dsl.eval_module(A, exprs[1])
    except DSLError as exc:
        if custom:
            chk.detail = f"cannot build modules: {exc}"
            _require(report, chk, False)
        chk.detail = f"default recipe not applicable ({exc}); searching small modules instead"
        report.recipe = "search"
        report.checks.append(chk)
        m1, m2 = _search_pair(report)
    else:
        chk.detail = f"M1 = {exprs[0]}, M2 = {exprs[1]}"
        chk.dims = {"M1": list(m1.dims), "M2": list(m2.dims)}
        _require(report, chk, m1.dimension > 0 and m2.dimension > 0)
    mods["M1"], mods["M2"] = m1, m2

    if report.recipe != "search":
        # 2. indecomposability
        ind = (is_indecomposable(m1, seed), is_indecomposable(m2, seed))
        _require(report, Check("end-terms-indecomposable", detail=f"M1: {ind[0]}, M2: {ind[1]}"), all(ind))

        # 3. tau_3(M) = M, hence M = tau(Omega^2(M))
        chk = Check("end-terms-in-tau-omega2")
        t1, t2 = tau_n(m1, 3), tau_n(m2, 3)
        mods["tau3(M1)"], mods["tau3(M2)"] = t1, t2
        fixed = (is_isomorphic(t1, m1, seed), is_isomorphic(t2, m2, seed))
        chk.detail = f"tau_3(M1) = M1: {fixed[0]}, tau_3(M2) = M2: {fixed[1]}"
        chk.dims = {"tau3(M1)": list(t1.dims), "tau3(M2)": list(t2.dims)}
        _require(report, chk, all(fixed))

    # 4. Ext^1(M2, M1)
    classes = ext1_basis(m2, m1)
    chk = Check("ext1-nonzero", detail=f"dim Ext^1(M2, M1) = {len(classes)}")
    _require(report, chk, len(classes) >= 1)

    # 5. the extensions
    chk = Check("extensions-non-split")
    seqs = [extension_from_class(m2, m1, c) for c in classes]
    exact = all(s.is_exact() for s in seqs)
    split = [s.is_split() for s in seqs]
    chk.detail = f"{len(seqs)} extension(s); exact: {exact}; split: {split}"
    w = seqs[0].middle
    mods["W"] = w
    chk.dims = {"W": list(w.dims)}
    _require(report, chk, exact and not any(split))

    # 6. decompose the middle term
    chk = Check("decompose-middle-term")
    dw = decompose(w, seed)
    chk.summands = {"W": _summary(dw)}
    ok = dw.verify()
    if report.recipe == "default" and A.vertex_count >= 2:
        p2 = projective(A, 2)
        mods["P2"] = p2
        flags = [is_isomorphic(r, p2, seed) for r in dw.flat()]
        ok = ok and len(dw) == 2 and sum(flags) == 1
        chk.detail = f"{len(dw)} summands, {sum(flags)} isomorphic to P(2)"
        others = [r for r, f in zip(dw.flat(), flags) if not f]
    else:
        others = [r for r in dw.flat() if not is_projective(r)]
        chk.detail = f"{len(dw)} summands, {len(others)} non-projective"
    _require(report, chk, ok and bool(others))

    # 7. the complementary summand U
    candidates = []
    for k, u in enumerate(others):
        mods[f"U{k}" if k else "U"] = u
        candidates.append(u)
    u = candidates[0]
    if report.recipe != "default":
        for cand in candidates:
            if not in_tau_omega(cand, 2, seed):
                u = cand
                break
    mods["U"] = u
    chk = Check("summand-U-indecomposable", dims={"U": list(u.dims)})
    ind = is_indecomposable(u, seed)
    chk.detail = f"U indecomposable: {ind}"
    _require(report, chk, ind)

    # 8. tau^-1(U) is not a 2nd syzygy
    k = tau_inverse(u)
    mods["tauinv(U)"] = k
    test = nth_syzygy_test(k, 2, seed)
    mods["T"] = test.witness
    for j, (r, _) in enumerate(test.witness_decomposition.summands):
        mods[f"T{j}"] = r
    chk = Check(
        "tau-inverse-U-not-2nd-syzygy",
        detail=f"tau^-1(U) summand of P + Omega^2(Omega^-2(tau^-1(U))): {test.holds}",
        dims={"tauinv(U)": list(k.dims), "T": list(test.witness.dims)},
        summands={"T": _summary(test.witness_decomposition)},
    )
    verdict = NOT_FOUND if report.recipe != "default" else NOT_CONFIRMED
    _require(report, chk, k.dimension > 0 and not test.holds, verdict)

    # 9. conclusion
    tu = tau_omega_test(u, 2, seed)
    tw = tau_omega_test(w, 2, seed)
    chk = Check(
        "not-extension-closed",
        detail=(
            f"M1, M2 in tau(Omega^2); U in tau(Omega^2): {tu.holds}; W in tau(Omega^2): {tw.holds}"
        ),
    )
    _require(report, chk, not tu.holds and not tw.holds)


def _search_pair(report: VerifierReport) -> tuple[Representation, Representation]:
    A, seed = report.algebra, report.seed
    pool = []
    for name, m in _pool(A):
        for r, _ in decompose(m, seed).summands:
            if not any(r.dims == q.dims and is_isomorphic(r, q, seed) for _, q in pool):
                pool.append((name, r))
    members = [(n, m) for n, m in pool if not is_projective(m) and in_tau_omega(m, 2, seed)]
    chk = Check("search-end-terms", detail=f"{len(members)} of {len(pool)} pooled indecomposables in tau(Omega^2)")
    for n2, m2 in members:
        for n1, m1 in members:
            if ext1_basis(m2, m1):
                chk.detail += f"; first pair with Ext^1 != 0: M1 = {n1}, M2 = {n2}"
                chk.dims = {"M1": list(m1.dims), "M2": list(m2.dims)}
                _require(report, chk, True)
                return m1, m2
    chk.detail += "; Ext^1 vanishes on every pair"
    _require(report, chk, False, NOT_FOUND)
    raise AssertionError("unreachable")
