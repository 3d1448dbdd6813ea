"""H-representation data model and text I/O.

A polytope is an ordered list of inequality rows coeffs.x <= rhs with exact
rational entries. Row order is significant and survives serialization
round-trips. The text format is deliberately plain:

    # comment lines are optional; a "# family: NAME n=.. d=.." line
    # carries construction metadata for formula-based dispatch
    n d
    <d coefficients and one right-hand side per row, rationals like 2, -7, 3/4>

Everything here is immutable after construction and safe to share between
concurrent enumeration workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HRepParseError
from .ratlin import Vec, dot, vec

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")
_FAMILY_RE = re.compile(r"^#\s*family:\s*(\w+)\s+n=(\d+)\s+d=(\d+)\s*$")

FAMILY_NAMES = ("pstar", "dualcyclic", "prism3", "polygon")


@dataclass(frozen=True)
class FamilyTag:
    """Names the constructor an H-rep came from, for formula dispatch."""
    name: str
    n: int
    d: int

    def comment(self) -> str:
        return f"# family: {self.name} n={self.n} d={self.d}"


@dataclass(frozen=True)
class Constraint:
    """One inequality coeffs.x <= rhs."""
    coeffs: Vec
    rhs: Fraction
    label: str | None = field(default=None, compare=False)

    def slack(self, x: Vec) -> Fraction:
        return self.rhs - dot(self.coeffs, x)

    def is_tight(self, x: Vec) -> bool:
        return dot(self.coeffs, x) == self.rhs

    def holds(self, x: Vec) -> bool:
        return dot(self.coeffs, x) <= self.rhs


def make_constraint(coeffs, rhs, label: str | None = None) -> Constraint:
    return Constraint(vec(coeffs), Fraction(rhs), label)


@dataclass(frozen=True)
class HPolytope:
    """A polyhedron {x in R^dim : all constraints hold}, row order preserved."""
    dim: int
    constraints: tuple[Constraint, ...]
    family: FamilyTag | None = None

    def __post_init__(self):
        if self.dim <= 0:
            raise ValueError("ambient dimension must be positive")
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError("constraint dimension mismatch")

    @property
    def n(self) -> int:
        return len(self.constraints)

    def rows(self) -> list[Vec]:
        return [c.coeffs for c in self.constraints]

    def rhs(self) -> list[Fraction]:
        return [c.rhs for c in self.constraints]

    def contains(self, x: Vec) -> bool:
        return all(c.holds(x) for c in self.constraints)

    def tight_at(self, x: Vec) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.constraints) if c.is_tight(x))

    def permuted(self, order) -> "HPolytope":
        """Same polyhedron with rows reordered; family metadata is dropped."""
        return HPolytope(self.dim, tuple(self.constraints[i] for i in order))


@dataclass(frozen=True)
class LI2Profile:
    """Structural profile of how many variables each row touches.

    n_prime counts rows with exactly two nonzero coefficients and
    pair_counts maps each unordered variable pair (i, j), 0-based with
    i < j, to the number of rows supported on it.
    """
    is_li2: bool
    n_prime: int
    pair_counts: dict[tuple[int, int], int]
    single_var_count: int


def li2_profile(p: HPolytope) -> LI2Profile:
    """Classify rows by support size; nonzero means exactly nonzero, no epsilon."""
    pair_counts: dict[tuple[int, int], int] = {}
    n_prime = 0
    singles = 0
    is_li2 = True
    for c in p.constraints:
        support = [j for j, a in enumerate(c.coeffs) if a != 0]
        if len(support) == 1:
            singles += 1
        elif len(support) == 2:
            n_prime += 1
            key = (support[0], support[1])
            pair_counts[key] = pair_counts.get(key, 0) + 1
        elif len(support) > 2:
            is_li2 = False
    return LI2Profile(is_li2, n_prime, pair_counts, singles)


def _parse_rational(token: str, line: int) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise HRepParseError(f"malformed rational {token!r}", line)
    value = Fraction(token)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise HRepParseError(f"zero denominator in {token!r}", line)
    return value


def parse_hrep(text: str | bytes) -> HPolytope:
    """Parse the H-rep text format; serialize(parse(t)) == t up to whitespace."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise HRepParseError(f"input is not valid UTF-8: {exc}") from None
    family: FamilyTag | None = None
    data_lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = _FAMILY_RE.match(stripped)
            if m and family is None:
                name = m.group(1)
                if name in FAMILY_NAMES:
                    family = FamilyTag(name, int(m.group(2)), int(m.group(3)))
            continue
        data_lines.append((lineno, stripped.split()))

    if not data_lines:
        raise HRepParseError("missing 'n d' header line")
    header_line, header = data_lines[0]
    if len(header) != 2 or not all(t.isdigit() for t in header):
        raise HRepParseError("header must be two positive integers 'n d'", header_line)
    n, d = int(header[0]), int(header[1])
    if n < 0 or d <= 0:
        raise HRepParseError("header must satisfy n >= 0 and d >= 1", header_line)
    if len(data_lines) - 1 < n:
        raise HRepParseError(f"expected {n} constraint rows, found {len(data_lines) - 1}")
    if len(data_lines) - 1 > n:
        extra_line = data_lines[n + 1][0]
        raise HRepParseError("trailing data after the declared constraint rows", extra_line)

    constraints = []
    for lineno, tokens in data_lines[1:]:
        if len(tokens) != d + 1:
            raise HRepParseError(
                f"expected {d} coefficients and one right-hand side, got {len(tokens)} fields",
                lineno)
        values = [_parse_rational(t, lineno) for t in tokens]
        constraints.append(Constraint(tuple(values[:d]), values[d]))
    return HPolytope(d, tuple(constraints), family)


def _fmt(q: Fraction) -> str:
    return str(q)  # Fraction renders lowest terms, "3" or "-1/2"


def serialize_hrep(p: HPolytope) -> str:
    """Canonical text form: lowest-terms rationals, one constraint per line."""
    lines = []
    if p.family is not None:
        lines.append(p.family.comment())
    lines.append(f"{p.n} {p.dim}")
    for c in p.constraints:
        lines.append(" ".join([_fmt(a) for a in c.coeffs] + [_fmt(c.rhs)]))
    return "\n".join(lines) + "\n"
