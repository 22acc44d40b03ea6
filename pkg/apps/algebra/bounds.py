"""
Closed-form degree and regularity bounds, evaluated exactly.

Values whose bit size exceeds settings.STABLEGB_BIT_CAP are kept symbolically as
coef * base^exponent and compared through log2.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from .exceptions import DomainError

logger = logging.getLogger(__name__)


class Formula(str, Enum):
    MOLLER_MORA = "moller_mora"
    GIUSTI = "giusti"
    DUBE = "dube"
    CAVIGLIA_SBARRA = "caviglia_sbarra"
    CS_RECURSION = "cs_recursion"
    MAYR_RITSCHER = "mayr_ritscher"
    HS_A = "hs_A"
    HS_A_DEPTH = "hs_A_depth"
    HS_C = "hs_C"
    HS_C_DEPTH = "hs_C_depth"
    HS_C_RECURSION = "hs_C_recursion"
    MACAULAY_0DIM = "macaulay_0dim"
    LAZARD = "lazard"
    LAZARD_AFFINE = "lazard_affine"
    CM_NOETHER = "cm_noether"
    FSET_BOUND = "fset_bound"
    FSET_BOUND_DEPTH = "fset_bound_depth"


@dataclass(frozen=True)
class BoundValue:
    formula_id: Formula
    inputs: Dict[str, object]
    log2: float
    value: Optional[int] = None
    exact: Optional[Fraction] = None
    symbolic: Optional[Tuple[Fraction, Fraction, int]] = None

    @property
    def materialized(self) -> bool:
        return self.value is not None

    @property
    def text(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        if self.materialized:
            return f"{self.value} (ceiling)"
        coef, base, exponent = self.symbolic
        return f"{coef}*({base})^{exponent}"

    def admits(self, x: int) -> bool:
        """x <= bound, exactly."""
        if self.exact is not None:
            return x <= self.exact
        if self.materialized:
            # irrational: the bound lies strictly below its ceiling
            return x < self.value
        return x <= 0 or math.log2(x) < self.log2

    def compare(self, other: "BoundValue") -> int:
        """-1, 0, 1; exact whenever both sides are materialized."""
        if self.exact is not None and other.exact is not None:
            left, right = self.exact, other.exact
        elif self.materialized and other.materialized and self.value != other.value:
            # an irrational side only carries its ceiling
            left, right = self.value, other.value
        else:
            left, right = self.log2, other.log2
        return (left > right) - (left < right)


def _log2(x: Fraction) -> float:
    return math.log2(x.numerator) - math.log2(x.denominator)


def _from_exact(formula: Formula, inputs: dict, exact: Fraction) -> BoundValue:
    return BoundValue(formula, inputs, _log2(exact), math.ceil(exact), exact)


def _power(formula: Formula, inputs: dict, coef, base, exponent: int) -> BoundValue:
    coef, base = Fraction(coef), Fraction(base)
    bits = exponent * _log2(base) if base > 1 else 0.0
    log2 = _log2(coef) + bits
    if bits > settings.STABLEGB_BIT_CAP:
        logger.info(f"{formula.value}{tuple(inputs.values())} kept symbolic ({bits:.0f} bits)")
        return BoundValue(formula, inputs, log2, symbolic=(coef, base, exponent))
    return _from_exact(formula, inputs, coef * base ** exponent)


def _recursion(formula: Formula, inputs: dict, values: List[int]) -> BoundValue:
    return _from_exact(formula, inputs, Fraction(values[-1]))


def _require(condition: bool, formula: Formula, message: str):
    if not condition:
        raise DomainError(f"{formula.value}: needs {message}")


def _padded(degrees: Optional[Sequence[int]], n: int, d: int, length: int) -> List[int]:
    if degrees is None:
        degrees = [d] * n
    ordered = sorted((int(x) for x in degrees), reverse=True)
    if any(x < 1 for x in ordered):
        raise DomainError("generator degrees must be positive")
    return (ordered + [1] * length)[:length]


def _hs_a_zero_dim(formula: Formula, inputs: dict, n: int, d: int) -> BoundValue:
    # 2 d^{n/2} = sqrt(4 d^n); irrational unless 4 d^n is a square
    square = 4 * d ** n
    root = math.isqrt(square)
    log2 = 1 + n * math.log2(d) / 2 if d > 1 else 1.0
    if root * root == square:
        return BoundValue(formula, inputs, log2, root, Fraction(root))
    return BoundValue(formula, inputs, log2, root + 1, None)


def _max(first: BoundValue, second: BoundValue) -> BoundValue:
    return first if first.compare(second) >= 0 else second


def _cs_recursion(d: int, n: int) -> List[int]:
    values = [d]
    product = d + 1
    for _ in range(1, n):
        values.append(d - 1 + product)
        product *= values[-1] + 1
    return values


def _hs_c_recursion(d: int, n: int, D: int) -> List[int]:
    head = d ** (n - D)
    shift = (n - D) * (d - 1)
    values = [head + shift]
    product = values[0] + 1
    for _ in range(n - D + 2, n + 1):
        values.append(head * product + shift)
        product *= values[-1] + 1
    return values


def bound(
    formula_id,
    n: int,
    d: int,
    D: Optional[int] = None,
    lam: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> BoundValue:
    try:
        f = Formula(formula_id)
    except ValueError:
        raise DomainError(f"unknown formula {formula_id}")
    _require(n >= 1 and d >= 1, f, "n >= 1 and d >= 1")
    D = 0 if D is None else D
    lam = 0 if lam is None else lam
    # for lazard_affine, D and depth belong to the homogenized ideal in n+1 variables
    top = n if f is Formula.LAZARD_AFFINE else n - 1
    _require(0 <= D <= top, f, f"0 <= D <= {top}, got D={D}")
    _require(0 <= lam <= D, f, f"0 <= depth <= D, got depth={lam}")
    inputs = {"n": n, "d": d, "D": D, "depth": lam}
    if degrees is not None:
        inputs["degrees"] = tuple(degrees)

    if f is Formula.MOLLER_MORA:
        return _power(f, inputs, 1, 2 * d, (2 * n + 2) ** (n + 1))
    if f is Formula.GIUSTI:
        return _power(f, inputs, 1, 2 * d, 2 ** (n - 1))
    if f is Formula.DUBE:
        return _power(f, inputs, 2, Fraction(d * d, 2) + d, 2 ** (n - 1))
    if f is Formula.CAVIGLIA_SBARRA:
        _require(n >= 2, f, "n >= 2")
        return _power(f, inputs, 1, 2 * d, 2 ** (n - 2))
    if f is Formula.CS_RECURSION:
        return _recursion(f, inputs, _cs_recursion(d, n))
    if f is Formula.MAYR_RITSCHER:
        _require(D >= 1, f, "D >= 1")
        return _power(f, inputs, 2, Fraction(d ** (n - D), 2) + d, 2 ** (D - 1))
    if f is Formula.HS_A:
        linear = _from_exact(f, inputs, Fraction((n - D + 1) * (d - 1) + 1))
        if D == 0:
            return _max(_hs_a_zero_dim(f, inputs, n, d), linear)
        return _max(_power(f, inputs, 2, d, (n - D) * 2 ** (D - 1)), linear)
    if f is Formula.HS_A_DEPTH:
        _require(D > 1 and D > lam, f, "D > 1 and D > depth")
        return _power(f, inputs, 2, d, (n - D) * 2 ** (D - lam - 1))
    if f is Formula.HS_C:
        _require(D >= 1, f, "D >= 1")
        return _power(f, inputs, 1, d ** (n - D) + (n - D) * (d - 1), 2 ** (D - 1))
    if f is Formula.HS_C_DEPTH:
        _require(D > lam, f, "D > depth")
        return _power(f, inputs, 1, d ** (n - D) + (n - D) * (d - 1), 2 ** (D - lam - 1))
    if f is Formula.HS_C_RECURSION:
        _require(D >= 1, f, "D >= 1")
        return _recursion(f, inputs, _hs_c_recursion(d, n, D))
    if f is Formula.MACAULAY_0DIM:
        _require(D == 0, f, "D = 0")
        return _from_exact(f, inputs, Fraction(sum(_padded(degrees, n, d, n)) - n + 1))
    if f is Formula.LAZARD:
        r = n - lam
        return _from_exact(f, inputs, Fraction(sum(_padded(degrees, n, d, r)) - r + 1))
    if f is Formula.LAZARD_AFFINE:
        r = n + 1 - lam
        return _from_exact(f, inputs, Fraction(sum(_padded(degrees, n, d, r)) - r + 1))
    if f is Formula.CM_NOETHER:
        r = n - D
        return _from_exact(f, inputs, Fraction(sum(_padded(degrees, n, d, r)) - r + 1))
    if f is Formula.FSET_BOUND:
        return _power(f, inputs, 1, d, (n - D) * 2 ** D)
    if f is Formula.FSET_BOUND_DEPTH:
        _require(D > lam, f, "D > depth")
        return _power(f, inputs, 1, d, (n - D) * 2 ** (D - lam - 1))
    raise DomainError(f"unknown formula {formula_id}")


def applicable_formulas(n: int, D: int, lam: int = 0) -> List[Formula]:
    formulas = [Formula.MOLLER_MORA, Formula.GIUSTI, Formula.DUBE, Formula.CS_RECURSION]
    if n >= 2:
        formulas.append(Formula.CAVIGLIA_SBARRA)
    formulas.append(Formula.HS_A)
    if D >= 1:
        formulas += [Formula.MAYR_RITSCHER, Formula.HS_C, Formula.HS_C_RECURSION]
    if D > 1 and D > lam:
        formulas.append(Formula.HS_A_DEPTH)
    if D > lam:
        formulas += [Formula.HS_C_DEPTH, Formula.FSET_BOUND_DEPTH]
    if D == 0:
        formulas.append(Formula.MACAULAY_0DIM)
    if D <= 1:
        formulas.append(Formula.LAZARD)
    formulas += [Formula.LAZARD_AFFINE, Formula.CM_NOETHER, Formula.FSET_BOUND]
    return formulas


def _ascending(a: BoundValue, b: BoundValue) -> int:
    # equal values keep a fixed order by formula id
    return a.compare(b) or (a.formula_id.value > b.formula_id.value) - (a.formula_id.value < b.formula_id.value)


def compare_bounds(
    n: int, d: int, D: int, lam: int = 0, degrees: Optional[Sequence[int]] = None
) -> List[BoundValue]:
    """Every applicable bound, ascending."""
    values = [bound(f, n, d, D, lam, degrees) for f in applicable_formulas(n, D, lam)]
    return sorted(values, key=cmp_to_key(_ascending))


@dataclass(frozen=True)
class RemarkComparison:
    left: BoundValue
    right: BoundValue
    printed: str
    computed: str = field(init=False)

    def __post_init__(self):
        sign = self.left.compare(self.right)
        object.__setattr__(self, "computed", "<" if sign < 0 else ">" if sign > 0 else "=")

    @property
    def discrepancy(self) -> bool:
        return self.printed != self.computed


# (left formula, right formula, n, d, D, printed direction)
REMARK_TABLE = (
    (Formula.HS_A, Formula.HS_C, 3, 5, 2, ">"),
    (Formula.MAYR_RITSCHER, Formula.HS_C, 4, 5, 1, ">"),
    (Formula.HS_A, Formula.HS_C, 5, 3, 4, "<"),
    (Formula.HS_A, Formula.MAYR_RITSCHER, 5, 2, 4, "<"),
    (Formula.HS_A, Formula.MAYR_RITSCHER, 5, 4, 2, ">"),
    (Formula.MAYR_RITSCHER, Formula.HS_C, 5, 2, 3, "<"),
)


def remark_comparisons() -> List[RemarkComparison]:
    """The printed pairwise comparisons next to what exact evaluation gives."""
    rows = []
    for left, right, n, d, D, printed in REMARK_TABLE:
        row = RemarkComparison(bound(left, n, d, D), bound(right, n, d, D), printed)
        if row.discrepancy:
            logger.warning(
                f"{left.value}({n},{d},{D}) = {row.left.value} vs {right.value} = {row.right.value}: "
                f"printed {printed}, computed {row.computed}"
            )
        rows.append(row)
    return rows
