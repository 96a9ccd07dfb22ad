"""The truncated basic cycle algebra K Z_e / J^N.

Z_e is the cyclic quiver with vertices 1..e and one arrow i -> i+1 (mod e);
the algebra truncates all paths of length >= N.  A path is determined by its
start vertex and length, so paths are stored as pairs ``(l, length)`` and all
segment extraction is index arithmetic.  Vertices are 1-based; every modular
reduction goes through ``underline`` (range [1, e]) or ``overline``
(range [0, e-1]).

Sparse algebra elements are dicts ``{(l, length): scalar}`` with no stored
zeros.  The Frobenius bilinear form pairs a path of length i with the unique
complementary path of length N-1-i; the Nakayama automorphism shifts start
vertices by N-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import Field
from .linalg import Matrix, squarefree

Path = tuple[int, int]          # (start vertex in [1, e], length >= 0)
Element = dict[Path, object]    # sparse algebra element / formal path sum


def chi(n: int, N: int) -> int:
    """Generator length of the minimal resolution in homological degree n."""
    k, odd = divmod(n, 2)
    return k * N + odd


@dataclass(frozen=True)
class Regime:
    """One record of every case split that basis choice, ring presentation
    and BV formulas consume; keeping them in one place prevents divergent
    regime logic."""

    char_divides_N: bool
    char_divides_e: bool
    coprime: bool          # gcd(N, e) == 1
    N_is_1_mod_e: bool
    semisimple: bool
    presentation: str      # "r1".."r8" for e >= 2, "loop-coprime"/"loop-divides" for e = 1
    top_even: bool         # even-degree basis reaches i = N-1 (char|N and gcd(N,e)=1)
    odd_uses_v: bool       # odd-degree basis uses single-vertex representatives


class AlgebraParams:
    """Immutable parameter pack (e, N, field) with all derived constants.

    Derived data: d = gcd(N, e), N1 = N/d, e1 = e/d, N = m e + t with
    0 <= t < e, c = gcd(N-1, e), N2 = (N-1)/c, e2 = e/c, the minimal
    exponents k_j (k_j N1 = j mod e1, smallest positive), and I (smallest
    positive with (I-1)N + 1 = 0 mod e, defined only when gcd(N, e) = 1).
    """

    __slots__ = ("e", "N", "field", "d", "N1", "e1", "m", "t", "c", "N2", "e2",
                 "k", "_I", "regime")

    def __init__(self, e: int, N: int, field: Field):
        if e < 1:
            raise ValueError("need at least one vertex")
        if N < 2:
            raise ValueError("truncation length must be at least 2")
        self.e = e
        self.N = N
        self.field = field
        self.d = gcd(N, e)
        self.N1 = N // self.d
        self.e1 = e // self.d
        self.m, self.t = divmod(N, e)
        self.c = gcd(N - 1, e)
        self.N2 = (N - 1) // self.c
        self.e2 = e // self.c
        self.k = tuple(self._smallest_exponent(j) for j in range(self.e1))
        if self.d == 1:
            self._I = next(i for i in range(1, e + 1) if ((i - 1) * N + 1) % e == 0)
        else:
            self._I = None
        self.regime = self._classify()

    def _smallest_exponent(self, j: int) -> int:
        return next(k for k in range(1, self.e1 + 1) if (k * self.N1 - j) % self.e1 == 0)

    @property
    def I(self) -> int:
        if self._I is None:
            raise ValueError(f"I undefined: gcd(N, e) = {self.d} != 1")
        return self._I

    def _classify(self) -> Regime:
        f = self.field
        char_N = f.divides(self.N)
        char_e = f.divides(self.e)
        coprime = self.d == 1
        n1mod = self.N % self.e == 1 % self.e
        # Semisimplicity of the Nakayama automorphism: char does not divide
        # its order e / gcd(N-1, e).
        semisimple = (not char_e) or (self.c > 1 and not f.divides(self.e2))
        if self.e == 1:
            pres = "loop-divides" if char_N else "loop-coprime"
        elif self.N <= self.e:
            pres = "r2" if (char_N and coprime) else "r1"
        elif not n1mod:
            pres = "r4" if (char_N and coprime) else "r3"
        elif self.m == 1:
            pres = "r6" if char_N else "r5"
        else:
            pres = "r8" if char_N else "r7"
        return Regime(
            char_divides_N=char_N,
            char_divides_e=char_e,
            coprime=coprime,
            N_is_1_mod_e=n1mod,
            semisimple=semisimple,
            presentation=pres,
            top_even=char_N and coprime,
            odd_uses_v=char_e,
        )

    # -- vertex normalizers -------------------------------------------------

    def underline(self, x: int) -> int:
        return (x - 1) % self.e + 1

    def overline(self, x: int) -> int:
        return x % self.e

    def path_end(self, p: Path) -> int:
        return self.underline(p[0] + p[1])

    def chi(self, n: int) -> int:
        return chi(n, self.N)

    # -- basis and multiplication -------------------------------------------

    def basis_paths(self) -> list[Path]:
        """All (l, j) with 0 <= j <= N-1: the monomial basis of the algebra."""
        return [(l, j) for j in range(self.N) for l in range(1, self.e + 1)]

    def mul_paths(self, p: Path, q: Path) -> Path | None:
        """Concatenation in the algebra; None when non-composable or truncated."""
        if q[0] != self.path_end(p):
            return None
        length = p[1] + q[1]
        if length >= self.N:
            return None
        return (p[0], length)

    def multiply(self, a: Element, b: Element) -> Element:
        out: Element = {}
        f = self.field
        for p, cp in a.items():
            for q, cq in b.items():
                r = self.mul_paths(p, q)
                if r is None:
                    continue
                v = f.norm(out.get(r, 0) + cp * cq)
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return out

    def unit(self) -> Element:
        one = self.field.of(1)
        return {(l, 0): one for l in range(1, self.e + 1)}

    # -- Frobenius structure -------------------------------------------------

    def bilinear_form_paths(self, p: Path, q: Path):
        """<p, q> = 1 when the lengths sum to N-1 and the endpoints match."""
        if p[1] + q[1] == self.N - 1 and q[0] == self.path_end(p):
            return self.field.of(1)
        return 0

    def bilinear_form(self, a: Element, b: Element):
        f = self.field
        total = 0
        for p, cp in a.items():
            for q, cq in b.items():
                if self.bilinear_form_paths(p, q):
                    total += cp * cq
        return f.norm(total)

    def pair_with_unit(self, a: Element):
        """<a, 1>: extracts the coefficient sum of the top-length paths."""
        f = self.field
        return f.norm(sum(c for (l, j), c in a.items() if j == self.N - 1))

    def nakayama_path(self, p: Path) -> Path:
        return (self.underline(p[0] + self.N - 1), p[1])

    def nakayama(self, a: Element) -> Element:
        return {self.nakayama_path(p): c for p, c in a.items()}

    def nakayama_order(self) -> int:
        return self.e // self.c

    def dual_basis_pairs(self) -> list[tuple[Path, Path]]:
        """(x, y) pairs with <x, y> = 1 and <x, y'> = 0 for other basis y'."""
        return [((l, i), (self.underline(l + i), self.N - 1 - i))
                for (l, i) in self.basis_paths()]

    # -- semisimplicity ------------------------------------------------------

    def nakayama_matrix(self) -> Matrix:
        """Permutation matrix of the Nakayama automorphism on one graded piece."""
        mat = Matrix.zero(self.field, self.e, self.e)
        one = self.field.of(1)
        for l in range(1, self.e + 1):
            target = self.underline(l + self.N - 1)
            mat.entries[target - 1][l - 1] = one
        return mat

    def is_semisimple(self) -> bool:
        """Criterion evaluation, cross-checked against the minimal-polynomial
        oracle on the permutation matrix; disagreement is an internal error."""
        by_criterion = self.regime.semisimple
        minpoly = self.nakayama_matrix().minimal_polynomial()
        by_minpoly = squarefree(self.field, minpoly)
        if by_criterion != by_minpoly:
            raise AssertionError(
                f"semisimplicity criterion ({by_criterion}) disagrees with "
                f"minimal-polynomial oracle ({by_minpoly}) at e={self.e}, "
                f"N={self.N}, field={self.field}")
        return by_criterion

    # -- misc ----------------------------------------------------------------

    def scalar_fraction(self, num: int, den: int):
        return self.field.of_fraction(Fraction(num, den))

    def __eq__(self, other):
        return (isinstance(other, AlgebraParams)
                and (self.e, self.N, self.field) == (other.e, other.N, other.field))

    def __hash__(self):
        return hash((self.e, self.N, self.field))

    def __repr__(self):
        return f"AlgebraParams(e={self.e}, N={self.N}, field={self.field})"


def element_eq(f: Field, a: Element, b: Element) -> bool:
    keys = set(a) | set(b)
    return all(f.norm(a.get(k, 0) - b.get(k, 0)) == 0 for k in keys)


def add_into(f: Field, acc: Element, term: Element, scale=1) -> None:
    """acc += scale * term, dropping cancelled entries."""
    for k, v in term.items():
        w = f.norm(acc.get(k, 0) + scale * v)
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)
