"""The two cochain models and the comparison morphisms between them.

Minimal model: degree-n cochains live on parallel pairs (gamma, b) where
gamma is the length-chi(n) path starting at some vertex l and b is a basis
path with the same endpoints, so a cochain is a sparse dict
``{(l, j): scalar}`` with j = len(b), j = chi(n) (mod e).

Reduced bar model: degree-n cochains evaluate tuples of positive-length
basis paths to algebra elements.  They are kept as evaluators (tables would
have (e(N-1))^n keys); every consumer only probes tuples produced by the
comparison morphism mu or by dual-basis insertion.

mu expands a resolution generator into bar tuples with alternating segment
lengths; omega collapses a bar tuple back onto the minimal model.  Both are
also implemented on chains (with outer algebra factors) so the chain-map
equations can be checked by direct evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .algebra import AlgebraParams, Element, Path, add_into, element_eq


# ---------------------------------------------------------------------------
# minimal cochains
# ---------------------------------------------------------------------------

@dataclass
class MinimalCochain:
    """Sparse cochain on the minimal complex: degree n, {(l, j): scalar}."""

    degree: int
    coeffs: dict[tuple[int, int], object] = dc_field(default_factory=dict)

    def copy(self) -> "MinimalCochain":
        return MinimalCochain(self.degree, dict(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled(self, par: AlgebraParams, s) -> "MinimalCochain":
        f = par.field
        out = {k: f.norm(s * v) for k, v in self.coeffs.items()}
        return MinimalCochain(self.degree, {k: v for k, v in out.items() if v})


def cochain_add(par: AlgebraParams, a: MinimalCochain, b: MinimalCochain,
                scale=1) -> MinimalCochain:
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    out = dict(a.coeffs)
    add_into(par.field, out, b.coeffs, scale)
    return MinimalCochain(a.degree, out)


def cochain_eq(par: AlgebraParams, a: MinimalCochain, b: MinimalCochain) -> bool:
    return a.degree == b.degree and element_eq(par.field, a.coeffs, b.coeffs)


def pair_indices(par: AlgebraParams, n: int) -> list[tuple[int, int]]:
    """Ordered basis (l, j) of the degree-n minimal cochain space."""
    target = par.overline(par.chi(n))
    return [(l, j) for j in range(par.N) if par.overline(j) == target
            for l in range(1, par.e + 1)]


def minimal_diff(par: AlgebraParams, f: MinimalCochain) -> MinimalCochain:
    """Coboundary on the minimal model.

    Even degree 2k: (l, i) -> -(l-1, i+1) + (l, i+1) on layers i <= N-2,
    zero on the top layer i = N-1.  Odd degree 2k+1: only the layer j = 0
    maps, to sum_{t=0..N-1} (l - t, N-1); other layers map to zero.
    """
    n = f.degree
    fld = par.field
    out: dict[tuple[int, int], object] = {}
    if n % 2 == 0:
        for (l, i), c in f.coeffs.items():
            if i >= par.N - 1:
                continue
            # two separate updates: the keys coincide when e = 1 and cancel
            add_into(fld, out, {(par.underline(l - 1), i + 1): fld.norm(-c)})
            add_into(fld, out, {(l, i + 1): c})
    else:
        for (l, j), c in f.coeffs.items():
            if j != 0:
                continue
            for t in range(par.N):
                add_into(fld, out, {(par.underline(l - t), par.N - 1): c})
    return MinimalCochain(n + 1, out)


# ---------------------------------------------------------------------------
# bar tuples and bar cochains
# ---------------------------------------------------------------------------

def tuple_composable(par: AlgebraParams, paths: tuple[Path, ...]) -> bool:
    return all(paths[i + 1][0] == par.path_end(paths[i])
               for i in range(len(paths) - 1))


def enumerate_bar_tuples(par: AlgebraParams, n: int) -> list[tuple[Path, ...]]:
    """All composable n-tuples of positive-length basis paths."""
    if n == 0:
        return [()]
    out = []
    for start in range(1, par.e + 1):
        for lengths in product(range(1, par.N), repeat=n):
            paths = []
            l = start
            for ln in lengths:
                paths.append((l, ln))
                l = par.underline(l + ln)
            out.append(tuple(paths))
    return out


class BarCochain:
    """Degree-n cochain on the reduced bar complex, kept as an evaluator.

    ``evaluate`` returns a sparse algebra element; tuples that are not
    composable, or that contain a length-0 entry, evaluate to zero (the
    reduced convention).  Results are memoized: consumers re-probe the same
    mu-expansion tuples many times.
    """

    __slots__ = ("par", "degree", "_fn", "_cache")

    def __init__(self, par: AlgebraParams, degree: int, fn):
        self.par = par
        self.degree = degree
        self._fn = fn
        self._cache: dict[tuple[Path, ...], Element] = {}

    def evaluate(self, paths: tuple[Path, ...]) -> Element:
        if len(paths) != self.degree:
            raise ValueError("tuple length != degree")
        if any(p[1] == 0 for p in paths):
            return {}
        if not tuple_composable(self.par, paths):
            return {}
        hit = self._cache.get(paths)
        if hit is None:
            hit = self._fn(paths)
            self._cache[paths] = hit
        return hit


def bar_diff(par: AlgebraParams, g: BarCochain) -> BarCochain:
    """Hochschild coboundary on bar cochains, with the dg sign convention
    (the outer-left term carries (-1)^(n+1))."""
    n = g.degree
    fld = par.field

    def fn(paths: tuple[Path, ...]) -> Element:
        out: Element = {}
        sign_first = -1 if (n + 1) % 2 else 1
        # a_1 * g(a_2 ... a_{n+1})
        lead = paths[0]
        val = g.evaluate(paths[1:])
        if val:
            shifted: Element = {}
            for p, c in val.items():
                r = par.mul_paths(lead, p)
                if r is not None:
                    add_into(fld, shifted, {r: c})
            add_into(fld, out, shifted, sign_first)
        # inner merges
        for i in range(n):
            merged = par.mul_paths(paths[i], paths[i + 1])
            if merged is None:
                continue
            sub = paths[:i] + (merged,) + paths[i + 2:]
            sign = -1 if (n - i) % 2 else 1
            add_into(fld, out, g.evaluate(sub), sign)
        # g(a_1 ... a_n) * a_{n+1}
        tail = paths[-1]
        val = g.evaluate(paths[:-1])
        for p, c in val.items():
            r = par.mul_paths(p, tail)
            if r is not None:
                add_into(fld, out, {r: c})
        return out

    return BarCochain(par, n + 1, fn)


# ---------------------------------------------------------------------------
# comparison morphisms (cochain level)
# ---------------------------------------------------------------------------

def mu_expand(par: AlgebraParams, n: int, start: int) -> list[tuple[tuple[Path, ...], Path]]:
    """Expansion of the degree-n generator at ``start`` into (tuple, tail) terms.

    Even n = 2k: segment lengths alternate (x_1, 1, ..., x_k, 1); odd
    n = 2k+1: (1, x_1, 1, ..., x_k, 1); each x_i ranges over [1, N-1] in
    lexicographic order and the right tail of length k(N-1) - sum(x) is
    dropped once it reaches length N (it vanishes in the algebra).
    """
    N = par.N
    k, odd = divmod(n, 2)
    out = []
    for xs in product(range(1, N), repeat=k):
        lengths: list[int] = [1] if odd else []
        for x in xs:
            lengths.extend((x, 1))
        paths = []
        l = start
        for ln in lengths:
            paths.append((l, ln))
            l = par.underline(l + ln)
        tail_len = k * (N - 1) - sum(xs)
        if tail_len >= N:
            continue
        out.append((tuple(paths), (l, tail_len)))
    return out


def omega_summands(par: AlgebraParams, paths: tuple[Path, ...]) -> list[tuple[Path, Path, Path]]:
    """Collapse of a composable bar tuple onto the minimal model.

    Returns (left, middle, right) path triples; empty when a vanishing
    condition fails.  Even n = 2k needs every product p_{2i-1} p_{2i} to die
    in the algebra; odd n = 2k+1 needs every p_{2i} p_{2i+1} to die, and
    then contributes one summand per proper prefix of p_1.  Summands whose
    outer path reaches length N are dropped.
    """
    if not paths:
        raise ValueError("empty tuple: the degree-0 collapse needs its anchor "
                         "vertex from the outer factors")
    n = len(paths)
    N = par.N
    k, odd = divmod(n, 2)
    total = sum(p[1] for p in paths)
    start = paths[0][0]
    out: list[tuple[Path, Path, Path]] = []
    if not odd:
        if any(paths[2 * i][1] + paths[2 * i + 1][1] < N for i in range(k)):
            return []
        right_len = total - k * N
        if right_len >= N:
            return []
        mid = (start, k * N)
        out.append(((start, 0), mid, (par.underline(start + k * N), right_len)))
        return out
    if any(paths[2 * i + 1][1] + paths[2 * i + 2][1] < N for i in range(k)):
        return []
    for j in range(paths[0][1]):
        right_len = total - k * N - j - 1
        if right_len >= N:
            continue
        mid_start = par.underline(start + j)
        out.append(((start, j), (mid_start, k * N + 1),
                    (par.underline(mid_start + k * N + 1), right_len)))
    return out


def pullback(par: AlgebraParams, f: MinimalCochain) -> BarCochain:
    """f composed with omega: the bar-model incarnation of a minimal cochain."""
    n = f.degree
    fld = par.field
    if n == 0:
        def fn0(paths: tuple[Path, ...]) -> Element:
            return {(l, j): c for (l, j), c in f.coeffs.items()}
        return BarCochain(par, 0, fn0)

    def fn(paths: tuple[Path, ...]) -> Element:
        out: Element = {}
        for left, mid, right in omega_summands(par, paths):
            for (l, j), c in f.coeffs.items():
                if mid[0] != l:
                    continue
                val = par.mul_paths(left, (l, j))
                if val is None:
                    continue
                val = par.mul_paths(val, right)
                if val is None:
                    continue
                add_into(fld, out, {val: c})
        return out

    return BarCochain(par, n, fn)


def pushforward(par: AlgebraParams, g: BarCochain) -> MinimalCochain:
    """g composed with mu: evaluate on every expansion tuple, multiply by the
    right tail, and read coefficients off the parallel-pair basis."""
    n = g.degree
    fld = par.field
    out: dict[tuple[int, int], object] = {}
    if n == 0:
        val = g.evaluate(())
        for (l, j), c in val.items():
            add_into(fld, out, {(l, j): c})
        return MinimalCochain(0, out)
    for start in range(1, par.e + 1):
        acc: Element = {}
        for paths, tail in mu_expand(par, n, start):
            val = g.evaluate(paths)
            for p, c in val.items():
                r = par.mul_paths(p, tail)
                if r is not None:
                    add_into(fld, acc, {r: c})
        for (l, j), c in acc.items():
            if l != start:
                raise AssertionError("pushforward left the parallel-pair basis")
            add_into(fld, out, {(start, j): c})
    return MinimalCochain(n, out)


# ---------------------------------------------------------------------------
# chain level (for the chain-map verification)
# ---------------------------------------------------------------------------

# Chains carry explicit outer factors: minimal chains are
# {(left, mid_start, right): coeff} with mid a resolution generator path, and
# bar chains are {(left, tuple, right): coeff}.

MinKey = tuple[Path, int, Path]
BarKey = tuple[Path, tuple[Path, ...], Path]


def _bar_add(par: AlgebraParams, acc: dict, key: BarKey, c) -> None:
    left, paths, right = key
    if any(p[1] == 0 for p in paths):
        return
    f = par.field
    v = f.norm(acc.get(key, 0) + c)
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def minimal_chain_diff(par: AlgebraParams, n: int, start: int) -> dict[MinKey, object]:
    """Differential of the minimal resolution on the degree-n generator."""
    N = par.N
    f = par.field
    out: dict[MinKey, object] = {}
    k, odd = divmod(n, 2)
    if odd:
        # arrow (x) gamma' (x) 1  -  1 (x) gamma'' (x) arrow
        l2 = par.underline(start + 1)
        key1 = ((start, 1), l2, (par.underline(start + k * N + 1), 0))
        key2 = ((start, 0), start, (par.underline(start + k * N), 1))
        add_into(f, out, {key1: f.of(1)})
        add_into(f, out, {key2: f.norm(-1)})
    else:
        if n == 0:
            return {}
        for i in range(N):
            left = (start, i)
            mid_start = par.underline(start + i)
            right = (par.underline(start + (k - 1) * N + i + 1), N - i - 1)
            add_into(f, out, {(left, mid_start, right): f.of(1)})
    return out


def bar_chain_diff(par: AlgebraParams, key: BarKey) -> dict[BarKey, object]:
    """Differential of the reduced bar resolution on one basis chain."""
    left, paths, right = key
    f = par.field
    n = len(paths)
    out: dict[BarKey, object] = {}
    la = par.mul_paths(left, paths[0])
    if la is not None:
        _bar_add(par, out, (la, paths[1:], right), f.of(1))
    for i in range(n - 1):
        merged = par.mul_paths(paths[i], paths[i + 1])
        if merged is None:
            continue
        sign = -1 if (i + 1) % 2 else 1
        _bar_add(par, out, (left, paths[:i] + (merged,) + paths[i + 2:], right),
                 f.norm(sign))
    ra = par.mul_paths(paths[-1], right)
    if ra is not None:
        _bar_add(par, out, (left, paths[:-1], ra), f.norm(-1 if n % 2 else 1))
    return out


def mu_chain(par: AlgebraParams, n: int, start: int) -> dict[BarKey, object]:
    one = par.field.of(1)
    out: dict[BarKey, object] = {}
    for paths, tail in mu_expand(par, n, start):
        _bar_add(par, out, ((start, 0), paths, tail), one)
    return out


def omega_chain(par: AlgebraParams, key: BarKey) -> dict[MinKey, object]:
    left, paths, right = key
    f = par.field
    out: dict[MinKey, object] = {}
    if not paths:
        # degree 0 is the identity B_0 = P_0; the vertex sits between the
        # outer factors
        if right[0] != par.path_end(left):
            return {}
        return {(left, par.path_end(left), right): f.of(1)}
    for lf, mid, rt in omega_summands(par, paths):
        l2 = par.mul_paths(left, lf)
        r2 = par.mul_paths(rt, right)
        if l2 is None or r2 is None:
            continue
        add_into(f, out, {(l2, mid[0], r2): f.of(1)})
    return out


def push_min_chain(par: AlgebraParams, chain: dict[MinKey, object], mapper):
    f = par.field
    out: dict = {}
    for (left, mid_start, right), c in chain.items():
        for key2, c2 in mapper(mid_start).items():
            l3 = par.mul_paths(left, key2[0])
            r3 = par.mul_paths(key2[2], right)
            if l3 is None or r3 is None:
                continue
            add_into(f, out, {(l3, key2[1], r3): f.norm(c * c2)})
    return out


def verify_chain_maps(par: AlgebraParams, max_degree: int) -> list[str]:
    """Check mu, omega are chain maps and omega∘mu = id up to max_degree.

    Returns a list of failure descriptions (empty = pass): the first failing
    generator and degree is reported for each identity that breaks.
    """
    f = par.field
    failures: list[str] = []
    for n in range(1, max_degree + 1):
        # b_n ∘ mu_n = mu_{n-1} ∘ d_n on each generator
        for start in range(1, par.e + 1):
            lhs: dict[BarKey, object] = {}
            for key, c in mu_chain(par, n, start).items():
                add_into(f, lhs, bar_chain_diff(par, key), c)
            dchain = minimal_chain_diff(par, n, start)
            rhs = push_min_chain(par, dchain, lambda mid: mu_chain(par, n - 1, mid))
            if not element_eq(f, lhs, rhs):
                failures.append(f"mu chain map fails at degree {n}, vertex {start}")
                break
        # omega_{n-1} ∘ b_n = d_n ∘ omega_n on each basis chain
        for paths in enumerate_bar_tuples(par, n):
            key = ((paths[0][0], 0), paths, (par.path_end(paths[-1]), 0))
            lhs2: dict[MinKey, object] = {}
            for key2, c in bar_chain_diff(par, key).items():
                add_into(f, lhs2, omega_chain(par, key2), c)
            rhs2 = push_min_chain(par, omega_chain(par, key),
                                   lambda mid: minimal_chain_diff(par, n, mid))
            if not element_eq(f, lhs2, rhs2):
                failures.append(f"omega chain map fails at degree {n}, tuple {paths}")
                break
        # omega_n ∘ mu_n = id on generators
        for start in range(1, par.e + 1):
            acc: dict[MinKey, object] = {}
            for key, c in mu_chain(par, n, start).items():
                add_into(f, acc, omega_chain(par, key), c)
            want = {((start, 0), start, (par.underline(start + par.chi(n)), 0)): f.of(1)}
            if not element_eq(f, acc, want):
                failures.append(f"omega∘mu != id at degree {n}, vertex {start}")
                break
    return failures
