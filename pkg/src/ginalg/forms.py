"""Exact arithmetic on homogeneous polynomials over the rationals.

Forms are sparse term maps keyed by exponent vectors, with Fraction
coefficients that stay in lowest terms with positive denominator.  All
values are immutable after construction; every operation is a pure
function of its inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]

LT, EQ, GT = -1, 0, 1

REVLEX = "revlex"
LEX = "lex"
MIXED = "mixed"
ORDER_NAMES = (REVLEX, LEX, MIXED)

# aliases accepted in files and on the command line
_ORDER_ALIASES = {
    "revlex": REVLEX,
    "lex": LEX,
    "mixed": MIXED,
    "mixed_last_revlex": MIXED,
}


def normalize_order_name(name: str) -> str:
    try:
        return _ORDER_ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; expected one of {ORDER_NAMES}") from None


def monomial_key(order: str, exps: Exponent) -> tuple[int, ...]:
    """Sort key, strictly increasing with the order among equal-degree exponents.

    revlex: the last index where two exponents differ decides, smaller wins.
    lex: the first index where they differ decides, larger wins.
    mixed: smaller last-variable exponent wins, ties broken by lex on the rest.
    """
    if order == REVLEX:
        return tuple(-e for e in reversed(exps))
    if order == LEX:
        return exps
    if order == MIXED:
        return (-exps[-1],) + exps[:-1]
    raise ValueError(f"unknown monomial order {order!r}")


def compare_monomials(order: str, a: Exponent, b: Exponent) -> int:
    """Return LT, EQ or GT.  Only equal-degree exponents are comparable."""
    if len(a) != len(b):
        raise ValueError(f"exponents over different variable counts: {len(a)} vs {len(b)}")
    if sum(a) != sum(b):
        raise ValueError(f"incomparable degrees: {sum(a)} vs {sum(b)}")
    ka, kb = monomial_key(order, a), monomial_key(order, b)
    return (ka > kb) - (ka < kb)


def sort_monomials(order: str, exps: Iterable[Exponent]) -> list[Exponent]:
    """Descending under the order (largest first)."""
    return sorted(exps, key=lambda e: monomial_key(order, e), reverse=True)


def monomials_of_degree(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, descending revlex."""
    if num_vars == 0:
        return [()] if degree == 0 else []
    out: list[Exponent] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, num_vars)
    return sort_monomials(REVLEX, out)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class Form:
    """A homogeneous polynomial with exact rational coefficients.

    The zero form keeps a declared degree so graded bookkeeping stays
    total.  Term maps never contain zero coefficients.
    """

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars: int, degree: int, terms: Mapping[Exponent, Fraction]):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {num_vars} variables")
            if sum(exps) != degree:
                raise ValueError(f"inhomogeneous form: degrees {degree} and {sum(exps)}")
            clean[exps] = clean.get(exps, Fraction(0)) + coeff
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> Form:
        return cls(num_vars, degree, {})

    @classmethod
    def one(cls, num_vars: int) -> Form:
        return cls(num_vars, 0, {(0,) * num_vars: Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, exps: Exponent, coeff=1) -> Form:
        exps = tuple(exps)
        return cls(num_vars, sum(exps), {exps: _as_fraction(coeff)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> Form:
        """x_index with 1-based index."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(num_vars))
        return cls(num_vars, 1, {exps: Fraction(1)})

    @classmethod
    def from_terms(cls, num_vars: int, terms: Mapping[Exponent, Fraction]) -> Form:
        """Infer the degree from the terms; empty maps give the zero form of degree 0."""
        degrees = {sum(e) for e in terms if terms[e] != 0}
        if len(degrees) > 1:
            lo, hi = min(degrees), max(degrees)
            raise ValueError(f"inhomogeneous form: degrees {lo} and {hi}")
        degree = degrees.pop() if degrees else 0
        return cls(num_vars, degree, terms)

    # -- predicates and access --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def variables_present(self) -> set[int]:
        """0-based indices of variables appearing with positive exponent."""
        present: set[int] = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    present.add(i)
        return present

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: Form) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(f"forms over different variable counts: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other: Form) -> Form:
        self._check_ring(other)
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        degree = other.degree if self.is_zero() else self.degree
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return Form(self.num_vars, degree, merged)

    def __neg__(self) -> Form:
        return Form(self.num_vars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = _as_fraction(other)
            return Form(self.num_vars, self.degree, {e: c * scalar for e, c in self.terms.items()})
        self._check_ring(other)
        product: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                product[key] = product.get(key, Fraction(0)) + ca * cb
        return Form(self.num_vars, self.degree + other.degree, product)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, scalar):
        scalar = _as_fraction(scalar)
        if scalar == 0:
            raise ZeroDivisionError("division of a form by zero")
        return self * (Fraction(1) / scalar)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Form)
            and self.num_vars == other.num_vars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, self.degree, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Form({self.num_vars}, {format_form(self)!r})"


def multiply(f: Form, g: Form) -> Form:
    return f * g


def initial_monomial(f: Form, order: str) -> Exponent:
    """The largest stored exponent under the order."""
    if f.is_zero():
        raise ValueError("initial monomial of zero")
    return max(f.terms, key=lambda e: monomial_key(order, e))


def leading_coefficient(f: Form, order: str) -> Fraction:
    return f.terms[initial_monomial(f, order)]


class CoordinateChange:
    """An invertible linear substitution x_i -> sum_j M[i][j] * x_j."""

    __slots__ = ("num_vars", "matrix")

    def __init__(self, rows: Iterable[Iterable]):
        matrix = tuple(tuple(_as_fraction(v) for v in row) for row in rows)
        s = len(matrix)
        if s == 0 or any(len(row) != s for row in matrix):
            raise ValueError("coordinate change matrix must be square and nonempty")
        object.__setattr__(self, "num_vars", s)
        object.__setattr__(self, "matrix", matrix)
        if _determinant(matrix) == 0:
            raise ValueError("singular coordinate change matrix")

    def __setattr__(self, name, value):
        raise AttributeError("CoordinateChange is immutable")

    @classmethod
    def identity(cls, num_vars: int) -> CoordinateChange:
        return cls([[1 if i == j else 0 for j in range(num_vars)] for i in range(num_vars)])

    def variable_image(self, index: int) -> Form:
        """Image of x_index (1-based) as a linear form."""
        row = self.matrix[index - 1]
        terms = {}
        for j, coeff in enumerate(row):
            exps = tuple(1 if k == j else 0 for k in range(self.num_vars))
            terms[exps] = coeff
        return Form(self.num_vars, 1, terms)

    def compose(self, other: CoordinateChange) -> CoordinateChange:
        """The change equivalent to applying self first, then other."""
        if self.num_vars != other.num_vars:
            raise ValueError("cannot compose changes over different variable counts")
        s = self.num_vars
        rows = [
            [sum(self.matrix[i][k] * other.matrix[k][j] for k in range(s)) for j in range(s)]
            for i in range(s)
        ]
        return CoordinateChange(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoordinateChange) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"CoordinateChange({[[str(v) for v in row] for row in self.matrix]})"


def _determinant(matrix: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    rows = [list(row) for row in matrix]
    s = len(rows)
    det = Fraction(1)
    for col in range(s):
        pivot = next((r for r in range(col, s) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, s):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def apply_change(f: Form, change: CoordinateChange) -> Form:
    """Substitute x_i -> sum_j M[i][j] x_j and expand."""
    if f.num_vars != change.num_vars:
        raise ValueError("form and coordinate change over different variable counts")
    s = f.num_vars
    images = [change.variable_image(i + 1) for i in range(s)]
    powers: list[list[Form]] = [[Form.one(s)] for _ in range(s)]
    result: dict[Exponent, Fraction] = {}
    for exps, coeff in f.terms.items():
        term = Form.monomial(s, (0,) * s, coeff)
        for i, e in enumerate(exps):
            while len(powers[i]) <= e:
                powers[i].append(powers[i][-1] * images[i])
            term = term * powers[i][e]
        for key, c in term.terms.items():
            result[key] = result.get(key, Fraction(0)) + c
    return Form(s, f.degree, result)


def restrict(f: Form, linear: Form) -> Form:
    """Normal form of f modulo the hyperplane linear = 0.

    Solves for the variable of largest index with nonzero coefficient in
    linear and substitutes; the result lives over num_vars - 1 variables,
    the removed slot deleted and the rest renumbered in order.  For
    linear = x_s this is exactly "set x_s = 0".
    """
    if linear.is_zero():
        raise ValueError("cannot restrict by the zero form")
    if linear.degree != 1 or linear.num_vars != f.num_vars:
        raise ValueError("restriction needs a degree-1 form over the same variables")
    s = f.num_vars
    coeffs = [Fraction(0)] * s
    for exps, coeff in linear.terms.items():
        coeffs[exps.index(1)] = coeff
    j = max(i for i, c in enumerate(coeffs) if c != 0)
    # x_j = sum_{i != j} (-c_i / c_j) x_i, renumbered onto s - 1 slots
    sub_terms: dict[Exponent, Fraction] = {}
    for i, c in enumerate(coeffs):
        if i == j or c == 0:
            continue
        slot = i if i < j else i - 1
        exps = tuple(1 if k == slot else 0 for k in range(s - 1))
        sub_terms[exps] = -c / coeffs[j]
    substitute = Form(s - 1, 1, sub_terms)
    sub_powers: list[Form] = [Form.one(s - 1)]
    result: dict[Exponent, Fraction] = {}
    for exps, coeff in f.terms.items():
        reduced = exps[:j] + exps[j + 1 :]
        while len(sub_powers) <= exps[j]:
            sub_powers.append(sub_powers[-1] * substitute)
        term = Form.monomial(s - 1, reduced, coeff) * sub_powers[exps[j]]
        for key, c in term.terms.items():
            result[key] = result.get(key, Fraction(0)) + c
    return Form(s - 1, f.degree, result)


def try_divide(f: Form, divisor: Form) -> Form | None:
    """Exact quotient f / divisor, or None when the division is not exact.

    Monomial long division; for homogeneous inputs under a multiplicative
    order the remainder vanishes iff the divisor divides f.
    """
    if divisor.is_zero():
        raise ValueError("division by the zero form")
    f._check_ring(divisor)
    if f.is_zero():
        return Form.zero(f.num_vars, max(f.degree - divisor.degree, 0))
    if f.degree < divisor.degree:
        return None
    lead_d = initial_monomial(divisor, REVLEX)
    lead_c = divisor.terms[lead_d]
    quotient: dict[Exponent, Fraction] = {}
    rest = f
    while not rest.is_zero():
        lead_r = initial_monomial(rest, REVLEX)
        q_exps = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(e < 0 for e in q_exps):
            return None
        q_coeff = rest.terms[lead_r] / lead_c
        quotient[q_exps] = q_coeff
        rest = rest - Form.monomial(f.num_vars, q_exps, q_coeff) * divisor
    return Form(f.num_vars, f.degree - divisor.degree, quotient)


# -- text format ------------------------------------------------------------
#
# term     = [sign] [rational "*"] factor { "*" factor }  |  [sign] rational
# factor   = "x" index [ "^" exponent ]
# rational = integer [ "/" positive-integer ]
#
# The bare-rational alternative admits degree-0 forms such as "1".


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable needs an index, e.g. x1", i)
            tokens.append(("var", text[i + 1 : j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_form(text: str, num_vars: int) -> Form:
    """Parse the polynomial grammar; rejects inhomogeneous input."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty form", 0)
    pos = 0

    def peek() -> tuple[str, str, int] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(kind: str) -> tuple[str, str, int]:
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError(f"expected {kind}, found end of input", len(text))
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        pos += 1
        return tok

    def parse_rational() -> Fraction:
        num = int(take("int")[1])
        if peek() and peek()[0] == "/":
            take("/")
            den_tok = take("int")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError("zero denominator", den_tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor() -> Exponent:
        tok = take("var")
        index = int(tok[1])
        if not 1 <= index <= num_vars:
            raise ParseError(f"variable x{index} out of range 1..{num_vars}", tok[2])
        exponent = 1
        if peek() and peek()[0] == "^":
            take("^")
            exponent = int(take("int")[1])
        return tuple(exponent if i == index - 1 else 0 for i in range(num_vars))

    def parse_term() -> tuple[Fraction, Exponent]:
        coeff = Fraction(1)
        exps = (0,) * num_vars
        tok = peek()
        if tok is None:
            raise ParseError("expected a term, found end of input", len(text))
        if tok[0] == "int":
            coeff = parse_rational()
            if peek() and peek()[0] == "*":
                take("*")
                exps = tuple(a + b for a, b in zip(exps, parse_factor()))
            else:
                return coeff, exps  # bare rational: a degree-0 term
        elif tok[0] == "var":
            exps = tuple(a + b for a, b in zip(exps, parse_factor()))
        else:
            raise ParseError(f"expected a term, found {tok[1]!r}", tok[2])
        while peek() and peek()[0] == "*":
            take("*")
            exps = tuple(a + b for a, b in zip(exps, parse_factor()))
        return coeff, exps

    terms: list[tuple[Fraction, Exponent]] = []
    sign = Fraction(1)
    if peek()[0] in "+-":
        sign = Fraction(-1) if take(peek()[0])[0] == "-" else Fraction(1)
    coeff, exps = parse_term()
    terms.append((sign * coeff, exps))
    while peek() is not None:
        tok = peek()
        if tok[0] not in "+-":
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        sign = Fraction(-1) if take(tok[0])[0] == "-" else Fraction(1)
        coeff, exps = parse_term()
        terms.append((sign * coeff, exps))

    degrees = sorted({sum(e) for _, e in terms})
    if len(degrees) > 1:
        raise ValueError(f"inhomogeneous form: degrees {degrees[0]} and {degrees[-1]}")
    collected: dict[Exponent, Fraction] = {}
    for coeff, exps in terms:
        collected[exps] = collected.get(exps, Fraction(0)) + coeff
    return Form(num_vars, degrees[0], collected)


def format_monomial(exps: Exponent) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_form(f: Form) -> str:
    """Canonical text: terms descending under revlex; parse(format(f)) == f."""
    if f.is_zero():
        return "0"
    pieces = []
    for exps in sort_monomials(REVLEX, f.terms):
        coeff = f.terms[exps]
        mag = abs(coeff)
        if sum(exps) == 0:
            body = str(mag)
        elif mag == 1:
            body = format_monomial(exps)
        else:
            body = f"{mag}*{format_monomial(exps)}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def normalize_form(f: Form, order: str = REVLEX) -> Form:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    if f.is_zero():
        return f
    denominator_lcm = 1
    for coeff in f.terms.values():
        denominator_lcm = denominator_lcm * coeff.denominator // math.gcd(denominator_lcm, coeff.denominator)
    scaled = {e: c * denominator_lcm for e, c in f.terms.items()}
    numerator_gcd = 0
    for coeff in scaled.values():
        numerator_gcd = math.gcd(numerator_gcd, abs(coeff.numerator))
    result = Form(f.num_vars, f.degree, {e: c / numerator_gcd for e, c in scaled.items()})
    if leading_coefficient(result, order) < 0:
        result = -result
    return result
