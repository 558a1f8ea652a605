import itertools

import pytest

from fillcurve import canonical_field
from fillcurve.rng import RngState


@pytest.fixture
def rng():
    return RngState(20240901)


def all_monic(field, degree):
    """Every monic polynomial of the exact degree, as coefficient tuples."""
    els = [f.raw for f in _elements(field)]
    for tail in itertools.product(els, repeat=degree):
        yield tuple(tail) + (field.one,)


def _elements(field):
    from fillcurve import enumerate_field

    return enumerate_field(field)


def naive_poly_mul(field, a, b):
    """Schoolbook product of raw coefficient lists (independent of UPoly)."""
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    while out and field.is_zero(out[-1]):
        out.pop()
    return out


def naive_eval(field, coeffs, x):
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


@pytest.fixture(scope="session")
def F2():
    return canonical_field(2)


@pytest.fixture(scope="session")
def F3():
    return canonical_field(3)


@pytest.fixture(scope="session")
def F4():
    return canonical_field(4)


@pytest.fixture(scope="session")
def F5():
    return canonical_field(5)


@pytest.fixture(scope="session")
def F9():
    return canonical_field(9)
