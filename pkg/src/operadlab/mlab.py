"""Finite-dimensional laboratory for signed insertion compositions of
multilinear maps.

A MultiMap is an exact tensor in Lin(V^(x)m, V^(x)n) over the rationals,
stored sparsely as {(out_index_tuple, in_index_tuple): Fraction}.  The
partial composition comp_ij plugs the j-th output of g into the i-th
input of f; the remaining lines keep their blocks in place:

    inputs  = (f-inputs 1..i-1,  g-inputs,  f-inputs i+1..b)
    outputs = (g-outputs 1..j-1, f-outputs, g-outputs j+1..c)

The signed total composition is

    f o g = sum over i <= b, j <= c of (-1)^(i(b+1) + j(c+1)) f comp_ij g

for f with b inputs and g with c outputs.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

_F0 = Fraction(0)


class MultiMapError(ValueError):
    pass


class MultiMap:
    """Exact multilinear map with m inputs and n outputs on a d-dim space."""

    __slots__ = ("d", "m", "n", "coeffs")

    def __init__(self, d: int, m: int, n: int, coeffs=None):
        if d < 1 or m < 1 or n < 1:
            raise MultiMapError("base dimension and arities must be >= 1")
        cc = {}
        for (out, inp), v in (coeffs or {}).items():
            v = Fraction(v)
            if not v:
                continue
            out, inp = tuple(out), tuple(inp)
            if len(out) != n or len(inp) != m:
                raise MultiMapError(f"index shape mismatch: {(out, inp)}")
            if not all(0 <= k < d for k in out + inp):
                raise MultiMapError(f"index out of range: {(out, inp)}")
            cc[(out, inp)] = v
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", cc)

    def __setattr__(self, *a):
        raise AttributeError("MultiMap is immutable")

    # -- constructors

    @classmethod
    def identity(cls, d: int) -> "MultiMap":
        return cls(d, 1, 1, {((k,), (k,)): 1 for k in range(d)})

    @classmethod
    def random(cls, rng: random.Random, d: int, m: int, n: int,
               lo: int = -3, hi: int = 3) -> "MultiMap":
        cc = {}
        for out in itertools.product(range(d), repeat=n):
            for inp in itertools.product(range(d), repeat=m):
                cc[(out, inp)] = Fraction(rng.randint(lo, hi))
        return cls(d, m, n, cc)

    # -- vector-space structure

    def _like(self, other):
        if not isinstance(other, MultiMap):
            raise MultiMapError("expected a MultiMap")
        if (self.d, self.m, self.n) != (other.d, other.m, other.n):
            raise MultiMapError("shape mismatch")

    def __add__(self, other):
        self._like(other)
        cc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            cc[k] = cc.get(k, _F0) + v
        return MultiMap(self.d, self.m, self.n, cc)

    def __neg__(self):
        return MultiMap(self.d, self.m, self.n,
                        {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "MultiMap":
        s = Fraction(s)
        return MultiMap(self.d, self.m, self.n,
                        {k: s * v for k, v in self.coeffs.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, MultiMap)
                and (self.d, self.m, self.n) == (other.d, other.m, other.n)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.d, self.m, self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"MultiMap(d={self.d}, {self.m}->{self.n}, {len(self.coeffs)} entries)"

    def apply(self, *vectors):
        """Evaluate on m input vectors (dicts index -> Fraction or sequences);
        returns the output tensor {out_tuple: Fraction}."""
        if len(vectors) != self.m:
            raise MultiMapError(f"expected {self.m} arguments")
        vecs = [_as_vec(v, self.d) for v in vectors]
        out = {}
        for (o, inp), c in self.coeffs.items():
            w = c
            for k, v in zip(inp, vecs):
                w *= v[k]
                if not w:
                    break
            if w:
                out[o] = out.get(o, _F0) + w
        return {k: v for k, v in out.items() if v}


def _as_vec(v, d):
    if isinstance(v, dict):
        return [Fraction(v.get(k, 0)) for k in range(d)]
    return [Fraction(x) for x in v]


# ---------------------------------------------------------------------------
# insertion compositions
# ---------------------------------------------------------------------------

def comp_ij(f: MultiMap, g: MultiMap, i: int, j: int) -> MultiMap:
    """Plug the j-th output of g into the i-th input of f (1-based)."""
    if f.d != g.d:
        raise MultiMapError("base dimensions differ")
    b, a = f.m, f.n
    dd, c = g.m, g.n
    if not 1 <= i <= b:
        raise MultiMapError(f"input index {i} out of range 1..{b}")
    if not 1 <= j <= c:
        raise MultiMapError(f"output index {j} out of range 1..{c}")
    cc = {}
    for (fo, fi), cf in f.coeffs.items():
        s = fi[i - 1]
        for (go, gi), cg in g.coeffs.items():
            if go[j - 1] != s:
                continue
            inp = fi[:i - 1] + gi + fi[i:]
            out = go[:j - 1] + fo + go[j:]
            key = (out, inp)
            cc[key] = cc.get(key, _F0) + cf * cg
    return MultiMap(f.d, b + dd - 1, a + c - 1, cc)


def insertion_sign(i: int, b: int, j: int, c: int) -> int:
    return -1 if (i * (b + 1) + j * (c + 1)) % 2 else 1


def circ(f: MultiMap, g: MultiMap) -> MultiMap:
    """The signed double sum over all insertions.

    With these signs the self-composition of a (2 -> 1) map is minus its
    associator and that of a (1 -> 2) map is its coassociator defect, which
    is what the master equation needs.
    """
    b, c = f.m, g.n
    total = None
    for i in range(1, b + 1):
        for j in range(1, c + 1):
            t = comp_ij(f, g, i, j).scale(insertion_sign(i, b, j, c))
            total = t if total is None else total + t
    return total


def circ_plain(f: MultiMap, g: MultiMap) -> MultiMap:
    """The unsigned insertion sum.

    Under this composition the single-output maps form a (right-symmetric)
    pre-Lie algebra and the single-input maps a (left-symmetric) Vinberg
    algebra, in the plain ungraded sense; the signed sum satisfies neither.
    """
    total = None
    for i in range(1, f.m + 1):
        for j in range(1, g.n + 1):
            t = comp_ij(f, g, i, j)
            total = t if total is None else total + t
    return total


def bracket(f: MultiMap, g: MultiMap) -> MultiMap:
    return circ(f, g) - circ(g, f)


def circ_associator(f: MultiMap, g: MultiMap, h: MultiMap,
                    compose=None) -> MultiMap:
    compose = compose or circ
    return compose(compose(f, g), h) - compose(f, compose(g, h))


def alternating_associator_sum(f: MultiMap, g: MultiMap, h: MultiMap,
                               compose=None) -> MultiMap:
    """Alternating sum of the composition associator over all argument
    orders (zero iff the composition is Lie-admissible on these inputs)."""
    maps = (f, g, h)
    total = None
    for perm in itertools.permutations(range(3)):
        sgn = _perm_sign(perm)
        t = circ_associator(*(maps[k] for k in perm), compose=compose).scale(sgn)
        total = t if total is None else total + t
    return total


def _perm_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# the master equation for an algebra/coalgebra pair
# ---------------------------------------------------------------------------

def master_residual(mu: MultiMap, delta: MultiMap) -> dict:
    """Graded components of the self-bracket of mu + delta.

    mu must be a (2 -> 1) map and delta a (1 -> 2) map; both are odd, so
    the self-bracket is twice the signed self-composition and splits into
    the (3 -> 1), (2 -> 2) and (1 -> 3) pieces returned here.
    """
    if (mu.m, mu.n) != (2, 1):
        raise MultiMapError("mu must be a (2 -> 1) map")
    if (delta.m, delta.n) != (1, 2):
        raise MultiMapError("delta must be a (1 -> 2) map")
    two = Fraction(2)
    return {
        (3, 1): circ(mu, mu).scale(two),
        (2, 2): (circ(mu, delta) + circ(delta, mu)).scale(two),
        (1, 3): circ(delta, delta).scale(two),
    }


def master_residual_is_zero(mu: MultiMap, delta: MultiMap) -> bool:
    return all(t.is_zero() for t in master_residual(mu, delta).values())


# -- the independent axiom oracle (direct tensor contractions) --------------

def assoc_defect(mu: MultiMap) -> MultiMap:
    """mu(mu(a,b),c) - mu(a,mu(b,c)) as a (3 -> 1) tensor."""
    d = mu.d
    cc = {}
    for (o1, (s, cidx)), c1 in _items(mu):
        for (o2, (aidx, bidx)), c2 in _items(mu):
            if o2[0] == s:
                key = (o1, (aidx, bidx, cidx))
                cc[key] = cc.get(key, _F0) + c1 * c2
    for (o1, (aidx, s)), c1 in _items(mu):
        for (o2, (bidx, cidx)), c2 in _items(mu):
            if o2[0] == s:
                key = (o1, (aidx, bidx, cidx))
                cc[key] = cc.get(key, _F0) - c1 * c2
    return MultiMap(d, 3, 1, cc)


def coassoc_defect(delta: MultiMap) -> MultiMap:
    """(delta x id)delta - (id x delta)delta as a (1 -> 3) tensor."""
    d = delta.d
    cc = {}
    for ((s, w3), (a,)), c1 in _items(delta):
        for ((w1, w2), (t,)), c2 in _items(delta):
            if t == s:
                key = ((w1, w2, w3), (a,))
                cc[key] = cc.get(key, _F0) + c1 * c2
    for ((w1, s), (a,)), c1 in _items(delta):
        for ((w2, w3), (t,)), c2 in _items(delta):
            if t == s:
                key = ((w1, w2, w3), (a,))
                cc[key] = cc.get(key, _F0) - c1 * c2
    return MultiMap(d, 1, 3, cc)


def compatibility_defect(mu: MultiMap, delta: MultiMap) -> MultiMap:
    """delta(mu(u,v)) - u_(1) (x) mu(u_(2), v) - mu(u, v_(1)) (x) v_(2)."""
    d = mu.d
    cc = {}
    for ((w1, w2), (s,)), c1 in _items(delta):
        for ((t,), (uu, vv)), c2 in _items(mu):
            if t == s:
                key = ((w1, w2), (uu, vv))
                cc[key] = cc.get(key, _F0) + c1 * c2
    for ((u1, u2), (uu,)), c1 in _items(delta):
        for ((t,), (s, vv)), c2 in _items(mu):
            if s == u2:
                key = ((u1, t), (uu, vv))
                cc[key] = cc.get(key, _F0) - c1 * c2
    for ((v1, v2), (vv,)), c1 in _items(delta):
        for ((t,), (uu, s)), c2 in _items(mu):
            if s == v1:
                key = ((t, v2), (uu, vv))
                cc[key] = cc.get(key, _F0) - c1 * c2
    return MultiMap(d, 2, 2, cc)


def infinitesimal_bialgebra_axioms(mu: MultiMap, delta: MultiMap):
    """The three axiom tensors (associativity, coassociativity,
    compatibility), computed by direct contraction."""
    return assoc_defect(mu), coassoc_defect(delta), compatibility_defect(mu, delta)


def _items(mm: MultiMap):
    return mm.coeffs.items()
