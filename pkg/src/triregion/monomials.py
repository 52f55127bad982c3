"""Monomials and monomial ideals in the polynomial ring K[x, y, z].

Everything here is exact integer arithmetic on exponent triples.  An ideal
is stored by its minimal generators; membership, colon ideals, Hilbert
functions and socle degrees are all divisibility computations on those
triples.  All values are immutable, so they are safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

VARIABLES = ("x", "y", "z")

#: Largest degree any degree-indexed operation accepts.  This is a guard
#: against accidental blow-up from malformed input, not a performance
#: promise; rebind the module attribute if a computation genuinely needs
#: larger degrees.
DEGREE_CAP = 512


class IdealSyntaxError(ValueError):
    """Malformed ideal text; ``position`` is the 0-based offset of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotArtinianError(ValueError):
    """Raised when an operation requires an Artinian ideal."""


def _check_degree(j: int) -> None:
    if j > DEGREE_CAP:
        raise ValueError(f"degree {j} exceeds the safety cap {DEGREE_CAP}")


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a y^b z^c, stored as its exponent triple."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"negative exponent in {(self.a, self.b, self.c)}")

    def degree(self) -> int:
        return self.a + self.b + self.c

    def divides(self, other: Monomial) -> bool:
        return self.a <= other.a and self.b <= other.b and self.c <= other.c

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.a, other.a), max(self.b, other.b), max(self.c, other.c))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.a + other.a, self.b + other.b, self.c + other.c)

    def divide_by(self, other: Monomial) -> Monomial:
        """Exact quotient self / other; raises unless other divides self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.a - other.a, self.b - other.b, self.c - other.c)

    def is_pure_power(self) -> bool:
        """True iff at most one exponent is positive (the unit counts)."""
        return sum(1 for e in (self.a, self.b, self.c) if e > 0) <= 1

    def exponents(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        parts = [
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(VARIABLES, (self.a, self.b, self.c))
            if e > 0
        ]
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self.a}, {self.b}, {self.c})"


ONE = Monomial(0, 0, 0)
X = Monomial(1, 0, 0)
Y = Monomial(0, 1, 0)
Z = Monomial(0, 0, 1)
VARIABLE_MONOMIALS = (X, Y, Z)


def revlex_key(m: Monomial) -> tuple[int, int, int]:
    """Sort key realising descending reverse-lexicographic order.

    m precedes n exactly when the last nonzero entry of the exponent
    difference m - n (variables ordered x, y, z) is negative.  In degree
    two this reads x^2, x*y, y^2, x*z, y*z, z^2.
    """
    return (m.c, m.b, m.a)


@lru_cache(maxsize=None)
def monomials_of_degree(j: int) -> tuple[Monomial, ...]:
    """All degree-j monomials, already in descending revlex order."""
    if j < 0:
        return ()
    out = []
    for c in range(j + 1):
        for b in range(j - c + 1):
            out.append(Monomial(j - c - b, b, c))
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators in canonical order.

    Construct through :meth:`from_generators`, which minimalizes; the raw
    constructor insists the tuple is already minimal and sorted.  The zero
    ideal (no generators) and the unit ideal (generator 1) are both valid.
    """

    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = self.generators
        for i, g in enumerate(gens):
            for h in gens:
                if h is not g and h.divides(g):
                    raise ValueError(f"generator {g} is divisible by {h}")
            if i and revlex_key(gens[i - 1]) > revlex_key(g):
                raise ValueError("generators not in canonical order")

    @staticmethod
    def from_generators(gens: Iterable[Monomial]) -> MonomialIdeal:
        """Minimalize a generator collection; the result is order-insensitive."""
        unique = set(gens)
        minimal = [
            m for m in unique
            if not any(n != m and n.divides(m) for n in unique)
        ]
        minimal.sort(key=revlex_key)
        return MonomialIdeal(tuple(minimal))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return ONE in self.generators

    def contains(self, m: Monomial) -> bool:
        """Membership: some minimal generator divides m."""
        return any(g.divides(m) for g in self.generators)

    def is_artinian(self) -> bool:
        """True iff the ideal contains a pure power of each of x, y and z."""
        return (
            any(g.b == 0 and g.c == 0 for g in self.generators)
            and any(g.a == 0 and g.c == 0 for g in self.generators)
            and any(g.a == 0 and g.b == 0 for g in self.generators)
        )

    def require_artinian(self) -> None:
        if not self.is_artinian():
            raise NotArtinianError(
                f"ideal ({self}) is not Artinian: it lacks a pure power of some variable"
            )

    def colon(self, m: Monomial) -> MonomialIdeal:
        """The colon ideal (I : m) = { n : n*m in I }."""
        return MonomialIdeal.from_generators(
            g.lcm(m).divide_by(m) for g in self.generators
        )

    def hilbert_function(self, j: int) -> int:
        """Number of degree-j monomials outside the ideal (0 for j < 0)."""
        if j < 0:
            return 0
        _check_degree(j)
        return sum(1 for m in monomials_of_degree(j) if not self.contains(m))

    def standard_monomials(self, j: int) -> list[Monomial]:
        """Degree-j monomials outside the ideal, in descending revlex order."""
        if j < 0:
            raise ValueError(f"degree must be nonnegative, got {j}")
        _check_degree(j)
        return [m for m in monomials_of_degree(j) if not self.contains(m)]

    def socle_degrees(self) -> list[int]:
        """Degrees of the monomial socle basis of the quotient, sorted.

        A standard monomial m lies in the socle when x*m, y*m and z*m all
        fall inside the ideal.  Requires an Artinian ideal, otherwise the
        degreewise search would not terminate.
        """
        self.require_artinian()
        degrees: list[int] = []
        j = 0
        while True:
            survivors = self.standard_monomials(j)
            if not survivors:
                return degrees
            for m in survivors:
                if all(self.contains(m * v) for v in VARIABLE_MONOMIALS):
                    degrees.append(j)
            j += 1

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __str__(self) -> str:
        if not self.generators:
            return "0"
        return ", ".join(str(g) for g in self.generators)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse comma-separated monomial terms such as ``x^6, y^7, x*y^5*z``.

    Factors inside a term may be separated by ``*`` or whitespace; a bare
    ``1`` denotes the unit monomial.  A variable may appear at most once
    per term.  The parsed generators are minimalized.
    """
    gens: list[Monomial] = []
    i, n = 0, len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def parse_uint(i: int) -> tuple[int, int]:
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise IdealSyntaxError("expected an exponent", start)
        return int(text[start:i]), i

    def parse_term(i: int) -> tuple[Monomial, int]:
        exps = {v: 0 for v in VARIABLES}
        seen: set[str] = set()
        saw_factor = False
        while True:
            i = skip_ws(i)
            if i < n and text[i] == "*":
                if not saw_factor:
                    raise IdealSyntaxError("'*' without a preceding factor", i)
                i = skip_ws(i + 1)
            if i >= n or text[i] == ",":
                break
            ch = text[i]
            if ch == "1":
                i += 1
                if i < n and text[i] == "^":
                    _, i = parse_uint(i + 1)
                saw_factor = True
                continue
            if ch not in VARIABLES:
                if saw_factor:
                    break
                raise IdealSyntaxError(f"expected a variable, found {ch!r}", i)
            if ch in seen:
                raise IdealSyntaxError(f"variable {ch!r} repeated within a term", i)
            seen.add(ch)
            i += 1
            if i < n and text[i] == "^":
                e, i = parse_uint(i + 1)
            else:
                e = 1
            exps[ch] = e
            saw_factor = True
        if not saw_factor:
            raise IdealSyntaxError("expected a monomial term", i)
        return Monomial(exps["x"], exps["y"], exps["z"]), i

    i = skip_ws(i)
    while True:
        m, i = parse_term(i)
        gens.append(m)
        i = skip_ws(i)
        if i == n:
            break
        if text[i] != ",":
            raise IdealSyntaxError(f"expected ',' between terms, found {text[i]!r}", i)
        i += 1
    return MonomialIdeal.from_generators(gens)
