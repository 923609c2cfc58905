from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boundquiver import dsl
from boundquiver.algebra import example_algebra
from boundquiver.errors import DSLError

ROOT = Path(__file__).resolve().parents[1]


def test_example_algebra_text_roundtrip():
    a = dsl.parse_algebra(dsl.EXAMPLE_ALGEBRA)
    assert a == example_algebra()
    assert dsl.parse_algebra(dsl.format_algebra(a)) == a
    assert "relation x^3" in dsl.format_algebra(a)


def test_shipped_algebra_file():
    a = dsl.parse_algebra((ROOT / "algebras" / "example.alg").read_text())
    assert a == example_algebra()


def test_field_override_and_comments():
    text = "# comment\nvertices 1\narrow a : 1 -> 1   # loop\nrelation a*a\n"
    a = dsl.parse_algebra(text, field=5)
    assert a.p == 5 and a.dimension == 2


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("vertices 2\narrow x : 1 -> 3\n", 2, 1),
        ("vertices 1\narrow a : 1 -> 1\nrelation a*b\n", 3, 12),
        ("vertices 1\nfield GF(4)\n", 2, 7),
        ("vertices 1\nfrobnicate\n", 2, 1),
        ("vertices 1\narrow a : 1 -> 1\nrelation a\n", 3, 10),
        ("vertices 1\narrow a : 1 -> 1\n", 1, 1),  # unbounded
        ("arrow a : 1 -> 1\n", 1, 1),
    ],
)
def test_algebra_errors_are_positioned(text, line, col):
    with pytest.raises(DSLError) as exc:
        dsl.parse_algebra(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert str(exc.value).startswith(f"{line}:{col}:")


def test_module_expressions(A):
    ev = lambda e: dsl.eval_module(A, e)
    assert ev("P(1)").dims == (3, 1)
    assert ev("sum(S(1), S(2), P(2))").dims == (2, 3)
    assert ev("taun(quot(x + z), 3)").dims == (2, 2)
    assert ev("syz(S(1), 1)").dims == (2, 1)
    assert ev("cosyz(S(2), 1)").dims == (1, 1)
    assert ev("top(P(1))").dims == (1, 0)
    assert ev("soc(P(1))").dims == (1, 1)
    assert ev("quot(x - 2*z, e2)").dims == (1, 1)
    assert ev("rep([1, 1], y=[[1]])").dims == (1, 1)
    assert ev("rep([1, 0])").dims == (1, 0)


@pytest.mark.parametrize(
    "expr, col",
    [
        ("Q(1)", 1),
        ("P(3)", 1),
        ("sum(P(1), ", 11),
        ("quot(x*z)", 8),
        ("quot(w)", 6),
        ("syz(S(1), 0)", 1),
        ("rep([1,1], x=[[1]], y=[[1]])", 1),  # violates x*y = 0
        ("rep([1,1], y=[[1, 0]])", 12),
        ("pquot(1, z)", 1),
        ("P(1) $", 6),
    ],
)
def test_module_expression_errors(A, expr, col):
    with pytest.raises(DSLError) as exc:
        dsl.eval_module(A, expr)
    assert exc.value.col == col


def test_trivial_algebra():
    a = dsl.parse_algebra("vertices 1\n")
    assert a.dimension == 1


@settings(max_examples=30, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), min_size=0, max_size=4),
            st.sampled_from([2, 3, 5, 7]),
        )
    )
)
def test_parse_print_roundtrip(spec):
    n, arrows, p = spec
    lines = [f"vertices {n}"] + [f"arrow a{k} : {s} -> {t}" for k, (s, t) in enumerate(arrows)]
    # every length-2 composable word is a relation, so the algebra is finite dimensional
    for k, (_, t) in enumerate(arrows):
        for j, (s2, _) in enumerate(arrows):
            if t == s2:
                lines.append(f"relation a{k}*a{j}")
    lines.append(f"field GF({p})")
    a = dsl.parse_algebra("\n".join(lines))
    text = dsl.format_algebra(a)
    assert dsl.parse_algebra(text) == a
    assert dsl.format_algebra(dsl.parse_algebra(text)) == text
