import random

import pytest

from boundquiver import dsl
from boundquiver.algebra import example_algebra
from boundquiver.linalg import Matrix
from boundquiver.repmod import (
    Representation,
    cokernel,
    hom_space,
    map_from_projective,
    projective_sum,
)

LOOP_ALGEBRA = """\
algebra L
vertices 1
arrow a : 1 -> 1
relation a^2
field GF({p})
"""


@pytest.fixture(scope="session")
def A():
    return example_algebra()


@pytest.fixture(scope="session")
def loop_algebra():
    return dsl.parse_algebra(LOOP_ALGEBRA.format(p=3))


@pytest.fixture(scope="session")
def ev(A):
    return lambda expr: dsl.eval_module(A, expr)


def random_module(algebra, rng: random.Random, max_dim: int = 8) -> Representation:
    """Cokernel of a random map between sums of indecomposable projectives.

    Retries until the total dimension is at most ``max_dim``.
    """
    verts = list(algebra.quiver.vertices)
    while True:
        tops0 = [rng.choice(verts) for _ in range(rng.randint(1, 3))]
        ps0 = projective_sum(algebra, tops0)
        if ps0.rep.dimension > max_dim + 4:
            continue
        tops1 = [rng.choice(verts) for _ in range(rng.randint(0, 2))]
        ps1 = projective_sum(algebra, tops1)
        images = []
        for v in tops1:
            row = [rng.randrange(algebra.p) for _ in range(ps0.rep.dim(v))]
            images.append(Matrix([row], algebra.p, shape=(1, ps0.rep.dim(v))))
        f = map_from_projective(ps1, ps0.rep, images)
        m = cokernel(f)[0]
        if 0 < m.dimension <= max_dim:
            return m


def random_hom(m, n, rng: random.Random):
    from boundquiver.repmod import ModuleHom

    basis = hom_space(m, n)
    vec = [0] * sum(a * b for a, b in zip(m.dims, n.dims))
    for row in basis.tolist():
        c = rng.randrange(m.p)
        vec = [(x + c * y) % m.p for x, y in zip(vec, row)]
    return ModuleHom.from_vector(m, n, vec, check=True)
