import pytest
from fractions import Fraction

from operadlab import (EShape, RelationExpr, App, Var, app, var, builtin,
                       Scalar)
from operadlab.free3 import normalize_monomial


# ---------------------------------------------------------------------------
# expression helpers shared across test modules
# ---------------------------------------------------------------------------

def E(node):
    return RelationExpr.of(node)


def M(a, b):
    """Application of the no-symmetry generator m."""
    return app("m", a, b)


def C(a, b):
    return app("c", a, b)


def B(a, b):
    return app("b", a, b)


X, Y, Z = var("x"), var("y"), var("z")


def associator(x, y, z):
    """A(x,y,z) = (x.y).z - x.(y.z) for the generator m; arguments are
    variable names or Var nodes."""
    x, y, z = (var(a) if isinstance(a, str) else a for a in (x, y, z))
    return E(M(M(x, y), z)) - E(M(x, M(y, z)))


def dot_monomial(shape, text):
    """Index of a dotted monomial like '(x.y).z' in the canonical basis of a
    single no-symmetry generator; returns (sign, index)."""
    vloc = {"x": 0, "y": 1, "z": 2}

    def parse(s):
        s = s.strip()
        depth = 0
        for k, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "." and depth == 0:
                return ("pair", strip(s[:k]), strip(s[k + 1:]))
        if s.startswith("(") and s.endswith(")"):
            return parse(s[1:-1])
        raise ValueError(s)

    def strip(s):
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            return parse(s[1:-1])
        return ("var", vloc[s])

    def conv(t):
        if t[0] == "var":
            return t
        _, a, b = t
        assert a[0] == "var" and b[0] == "var"
        return ("app", 0, a[1], b[1])

    t = parse(text)
    return normalize_monomial(shape, 0, conv(t[1]), conv(t[2]))


@pytest.fixture(scope="session")
def t3_shape():
    return EShape([("m", "none")])


@pytest.fixture(scope="session")
def pol_shape():
    return EShape([("c", "comm"), ("b", "anti")])
