"""
Exact polynomial arithmetic over the rationals.

Terms are exponent vectors, polynomials are sparse maps Term -> Fraction kept in
descending degree reverse lexicographic order (x_n < ... < x_1), so the leading
data of a polynomial is always its first entry.
"""
import logging
import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Rational

from .exceptions import DomainError, ParseError, UsageError

logger = logging.getLogger(__name__)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class RingContext:
    n: int
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"a ring needs at least one variable, got n={self.n}")
        names = tuple(self.names) or tuple(f"x{i}" for i in range(1, self.n + 1))
        if len(names) != self.n:
            raise UsageError(f"{len(names)} variable names given for n={self.n}")
        if len(set(names)) != self.n:
            raise UsageError(f"variable names must be distinct: {' '.join(names)}")
        object.__setattr__(self, "names", names)

    def index(self, name: str) -> int:
        """0-based position of a variable name."""
        return self.names.index(name)

    def extend(self, name: Optional[str] = None) -> "RingContext":
        """The ring with one extra (last, smallest) variable, for homogenization."""
        name = name or f"x{self.n + 1}"
        while name in self.names:
            name = name + "h"
        return RingContext(self.n + 1, self.names + (name,))

    def drop_last(self, j: int) -> "RingContext":
        if not 0 <= j < self.n:
            raise DomainError(f"cannot drop {j} of {self.n} variables")
        return RingContext(self.n - j, self.names[: self.n - j])


class Term(tuple):
    """A power product x^alpha stored as its exponent vector."""

    def __new__(cls, exponents: Iterable[int] = ()):
        return super().__new__(cls, exponents)

    @classmethod
    def one(cls, n: int) -> "Term":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Term":
        """x_i with 1-based i."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls(exps)

    @cached_property
    def degree(self) -> int:
        return sum(self)

    @cached_property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        # larger key == greater term under degrevlex
        return self.degree, tuple(-e for e in reversed(self))

    def is_one(self) -> bool:
        return not any(self)

    def times(self, other: "Term") -> "Term":
        return Term(a + b for a, b in zip(self, other))

    def divides(self, other: "Term") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def quotient(self, divisor: "Term") -> "Term":
        return Term(a - b for a, b in zip(self, divisor))

    def lcm(self, other: "Term") -> "Term":
        return Term(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: "Term") -> "Term":
        return Term(min(a, b) for a, b in zip(self, other))

    def support(self) -> frozenset:
        """0-based indices of the variables that occur."""
        return frozenset(i for i, e in enumerate(self) if e)


def degrevlex_key(t: Term):
    return t.sort_key


def degrevlex_cmp(a: Term, b: Term) -> Ordering:
    if len(a) != len(b):
        raise UsageError(f"cannot compare terms of arity {len(a)} and {len(b)}")
    a, b = Term(a), Term(b)
    if a.sort_key > b.sort_key:
        return Ordering.GREATER
    if a.sort_key < b.sort_key:
        return Ordering.LESS
    return Ordering.EQUAL


@lru_cache(maxsize=512)
def terms_of_degree(n: int, s: int) -> Tuple[Term, ...]:
    """Every term of degree s in n variables, in descending degrevlex order."""
    if s < 0:
        return ()
    terms = []
    for combo in combinations_with_replacement(range(n), s):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        terms.append(Term(exps))
    terms.sort(key=degrevlex_key, reverse=True)
    return tuple(terms)


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("n", "_coefficients", "_order")

    def __init__(self, n: int, terms: Optional[Mapping] = None):
        coefficients: Dict[Term, Fraction] = {}
        for term, coef in (terms or {}).items():
            if len(term) != n:
                raise UsageError(f"term {tuple(term)} does not have arity {n}")
            coef = Fraction(coef)
            if coef:
                coefficients[Term(term)] = coef
        self._set(n, coefficients)

    def _set(self, n: int, coefficients: Dict[Term, Fraction]):
        self.n = n
        self._coefficients = coefficients
        self._order = tuple(sorted(coefficients, key=degrevlex_key, reverse=True))

    @classmethod
    def _from_clean(cls, n: int, coefficients: Dict[Term, Fraction]) -> "Polynomial":
        # caller guarantees Term keys of arity n and no zero coefficient
        poly = cls.__new__(cls)
        poly._set(n, coefficients)
        return poly

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._from_clean(n, {})

    @classmethod
    def constant(cls, n: int, value) -> "Polynomial":
        return cls(n, {Term.one(n): value})

    @classmethod
    def monomial(cls, term: Term, coefficient=1) -> "Polynomial":
        return cls(len(term), {term: coefficient})

    # --- inspection -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __len__(self) -> int:
        return len(self._order)

    def __iter__(self) -> Iterator[Tuple[Term, Fraction]]:
        for term in self._order:
            yield term, self._coefficients[term]

    def terms(self) -> Tuple[Term, ...]:
        return self._order

    def coefficient(self, term: Term) -> Fraction:
        return self._coefficients.get(Term(term), Fraction(0))

    def as_dict(self) -> Dict[Term, Fraction]:
        return dict(self._coefficients)

    @property
    def leading_term(self) -> Term:
        if not self._order:
            raise DomainError("the zero polynomial has no leading term")
        return self._order[0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coefficients[self.leading_term]

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((t.degree for t in self._order), default=-1)

    def is_homogeneous(self) -> bool:
        return len({t.degree for t in self._order}) <= 1

    def is_constant(self) -> bool:
        return all(t.is_one() for t in self._order)

    def is_monomial(self) -> bool:
        return len(self._order) == 1

    # --- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.n != self.n:
            raise UsageError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self._coefficients)
        for term, coef in other._coefficients.items():
            value = acc.get(term, 0) + coef
            if value:
                acc[term] = value
            else:
                acc.pop(term, None)
        return Polynomial._from_clean(self.n, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean(self.n, {t: -c for t, c in self._coefficients.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, factor) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._from_clean(self.n, {t: c * factor for t, c in self._coefficients.items()})

    def shift(self, term: Term, factor=1) -> "Polynomial":
        """factor * term * self."""
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._from_clean(
            self.n, {t.times(term): c * factor for t, c in self._coefficients.items()}
        )

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: Dict[Term, Fraction] = {}
        for ta, ca in self._coefficients.items():
            for tb, cb in other._coefficients.items():
                t = ta.times(tb)
                acc[t] = acc.get(t, 0) + ca * cb
        return Polynomial._from_clean(self.n, {t: c for t, c in acc.items() if c})

    __rmul__ = scale

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.n, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self:
            return self
        return self.scale(1 / self.leading_coefficient)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._coefficients.items())))

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)})"

    # --- variable surgery ---------------------------------------------------

    def restrict_last(self, j: int) -> "Polynomial":
        """Set the last j variables to zero and drop them."""
        if j == 0:
            return self
        keep = self.n - j
        return Polynomial._from_clean(
            keep,
            {Term(t[:keep]): c for t, c in self._coefficients.items() if not any(t[keep:])},
        )

    def embed(self, extra: int) -> "Polynomial":
        """The same polynomial in a ring with `extra` more trailing variables."""
        pad = (0,) * extra
        return Polynomial._from_clean(
            self.n + extra, {Term(t + pad): c for t, c in self._coefficients.items()}
        )

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for term, coef in self._coefficients.items():
            value = coef
            for x, e in zip(values, term):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total


@dataclass(frozen=True)
class LeadingData:
    term: Term
    coefficient: Fraction

    @property
    def monomial(self) -> Polynomial:
        return Polynomial.monomial(self.term, self.coefficient)


def leading_data(f: Polynomial) -> LeadingData:
    if not f:
        raise DomainError("leading data of the zero polynomial is undefined")
    return LeadingData(f.leading_term, f.leading_coefficient)


def require_homogeneous(generators: Sequence[Polynomial]) -> int:
    """Validate a generating set of a proper nonzero homogeneous ideal; return its arity."""
    if not generators:
        raise DomainError("an ideal needs at least one generator")
    n = generators[0].n
    for f in generators:
        if f.n != n:
            raise UsageError(f"generators of arity {n} and {f.n} mixed")
        if not f:
            raise DomainError("zero generator")
        if not f.is_homogeneous():
            raise DomainError(f"generator {format_polynomial(f)} is not homogeneous")
        if f.degree == 0:
            raise DomainError("constant generator: the unit ideal is not supported")
    return n


# --- linear changes of variables ----------------------------------------------


def _to_fraction(value) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


@dataclass(frozen=True)
class LinearChange:
    """x_j -> sum_i a_ij x_i for an invertible n x n rational matrix (a_ij)."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_to_fraction(a) for a in row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise UsageError("a linear change needs a square matrix")
        object.__setattr__(self, "matrix", rows)
        if self.determinant() == 0:
            raise DomainError("singular matrix: not a change of variables")

    @property
    def n(self) -> int:
        return len(self.matrix)

    def _sympy(self) -> Matrix:
        return Matrix([[Rational(a.numerator, a.denominator) for a in row] for row in self.matrix])

    def determinant(self) -> Fraction:
        return _to_fraction(self._sympy().det())

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator, bound: int) -> "LinearChange":
        """Dense matrix with entries uniform in [-bound, bound]; singular draws are rejected."""
        while True:
            entries = rng.integers(-bound, bound + 1, size=(n, n))
            rows = tuple(tuple(int(a) for a in row) for row in entries)
            if Matrix(rows).det() != 0:
                return cls(rows)
            logger.info(f"Rejected singular random {n}x{n} matrix")

    def inverse(self) -> "LinearChange":
        return LinearChange(tuple(tuple(row) for row in self._sympy().inv().tolist()))

    def is_identity(self) -> bool:
        return self == LinearChange.identity(self.n)

    def images(self) -> List[Polynomial]:
        """The polynomials substituted for x_1, ..., x_n."""
        n = self.n
        return [
            Polynomial(n, {Term.variable(n, i + 1): self.matrix[i][j] for i in range(n)})
            for j in range(n)
        ]


def apply_linear_change(change: LinearChange, f: Polynomial) -> Polynomial:
    if change.n != f.n:
        raise UsageError(f"change of arity {change.n} applied to polynomial of arity {f.n}")
    images = change.images()
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(j: int, e: int) -> Polynomial:
        if (j, e) not in powers:
            powers[(j, e)] = images[j] ** e
        return powers[(j, e)]

    acc: Dict[Term, Fraction] = {}
    for term, coef in f:
        image = Polynomial.constant(f.n, coef)
        for j, e in enumerate(term):
            if e:
                image = image * power(j, e)
        for t, c in image:
            acc[t] = acc.get(t, 0) + c
    return Polynomial._from_clean(f.n, {t: c for t, c in acc.items() if c})


# --- homogenization -------------------------------------------------------------


def homogenize(f: Polynomial) -> Polynomial:
    """Homogenize with a new last variable x_{n+1}."""
    if not f:
        return Polynomial.zero(f.n + 1)
    d = f.degree
    return Polynomial._from_clean(
        f.n + 1, {Term(t + (d - t.degree,)): c for t, c in f}
    )


def dehomogenize(f: Polynomial) -> Polynomial:
    """Set the last variable to 1."""
    if f.n < 2:
        raise DomainError("cannot dehomogenize a univariate polynomial")
    acc: Dict[Term, Fraction] = {}
    for t, c in f:
        key = Term(t[:-1])
        acc[key] = acc.get(key, 0) + c
    return Polynomial._from_clean(f.n - 1, {t: c for t, c in acc.items() if c})


# --- text format ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))"
)


def _tokenize(text: str, line: int) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    return tokens


def parse_polynomial(text: str, ring: RingContext, line: int = 1) -> Polynomial:
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty polynomial", line, 1)
    acc: Dict[Term, Fraction] = {}
    i = 0

    def expect_int(pos: int) -> int:
        if pos >= len(tokens) or tokens[pos][0] != "number" or "/" in tokens[pos][1]:
            col = tokens[pos][2] if pos < len(tokens) else len(text) + 1
            raise ParseError("expected a non-negative integer exponent", line, col)
        return int(tokens[pos][1])

    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    while True:
        coef = Fraction(sign)
        exps = [0] * ring.n
        while True:
            if i >= len(tokens):
                raise ParseError("expected a factor", line, len(text) + 1)
            kind, value, col = tokens[i]
            if kind == "number":
                try:
                    coef *= Fraction(value)
                except ZeroDivisionError:
                    raise ParseError("zero denominator", line, col) from None
                i += 1
            elif kind == "name":
                if value not in ring.names:
                    raise ParseError(f"unknown variable {value!r}", line, col)
                i += 1
                exponent = 1
                if i < len(tokens) and tokens[i][:2] == ("op", "^"):
                    exponent = expect_int(i + 1)
                    i += 2
                exps[ring.index(value)] += exponent
            else:
                raise ParseError(f"unexpected {value!r}", line, col)
            if i < len(tokens) and tokens[i][:2] == ("op", "*"):
                i += 1
                continue
            break
        term = Term(exps)
        acc[term] = acc.get(term, 0) + coef
        if i >= len(tokens):
            break
        kind, value, col = tokens[i]
        if kind != "op" or value not in "+-":
            raise ParseError(f"expected '+' or '-', found {value!r}", line, col)
        sign = 1 if value == "+" else -1
        i += 1
    return Polynomial(ring.n, acc)


def parse_ideal(text: str) -> Tuple[RingContext, List[Polynomial]]:
    """Parse the ideal file format: a `ring:` line followed by one generator per line."""
    ring = None
    generators: List[Polynomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if ring is None:
            stripped = content.strip()
            if not stripped.startswith("ring:"):
                col = len(content) - len(content.lstrip()) + 1
                raise ParseError("first line must be 'ring: x1 x2 ...'", lineno, col)
            names = stripped[len("ring:"):].split()
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"bad variable name {name!r}", lineno, content.index(name) + 1)
            try:
                ring = RingContext(len(names), tuple(names))
            except (UsageError, DomainError) as exc:
                raise ParseError(str(exc), lineno, 1) from exc
            continue
        f = parse_polynomial(content, ring, lineno)
        if not f:
            col = len(content) - len(content.lstrip()) + 1
            raise ParseError("zero generator", lineno, col)
        generators.append(f)
    if ring is None:
        raise ParseError("missing 'ring:' line", 1, 1)
    return ring, generators


def default_ring(n: int) -> RingContext:
    return RingContext(n)


def format_term(term: Term, ring: Optional[RingContext] = None) -> str:
    names = (ring or RingContext(len(term))).names
    factors = [
        name if e == 1 else f"{name}^{e}" for name, e in zip(names, term) if e
    ]
    return "*".join(factors) or "1"


def format_polynomial(f: Polynomial, ring: Optional[RingContext] = None) -> str:
    ring = ring or RingContext(f.n)
    if not f:
        return "0"
    parts = []
    for k, (term, coef) in enumerate(f):
        magnitude = abs(coef)
        body = format_term(term, ring)
        if term.is_one():
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if k == 0:
            parts.append(f"-{text}" if coef < 0 else text)
        else:
            parts.append(f"- {text}" if coef < 0 else f"+ {text}")
    return " ".join(parts)


def format_ideal(ring: RingContext, generators: Sequence[Polynomial]) -> str:
    lines = ["ring: " + " ".join(ring.names)]
    lines.extend(format_polynomial(f, ring) for f in generators)
    return "\n".join(lines) + "\n"
