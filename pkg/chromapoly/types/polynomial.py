"""
Exact integer polynomials in one variable t.

Coefficients are Python ints stored ascending by power (index i holds the
coefficient of t^i). The zero polynomial is the empty tuple; every other
value has a nonzero highest coefficient.
"""

import functools
import logging
import re
import typing

from chromapoly.exceptions import DivisionByZeroError, InexactDivisionError

logger = logging.getLogger(__name__)

VARIABLE: typing.Final[typing.Text] = "t"


def _normalize(coefficients: typing.Iterable[int]) -> typing.Tuple[int, ...]:
    coefs = list(coefficients)
    while coefs and coefs[-1] == 0:
        coefs.pop()
    return tuple(coefs)


class Polynomial:
    __slots__ = ("_coefficients", "_hash")

    def __init__(self, coefficients: typing.Iterable[int] = ()):
        coefs = _normalize(coefficients)
        for c in coefs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"Coefficients must be int, got {type(c).__name__}")
        self._coefficients: typing.Tuple[int, ...] = coefs
        self._hash: int | None = None

    # Constructors
    @classmethod
    def zero(cls) -> "Polynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _ONE

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def t(cls) -> "Polynomial":
        return _T

    @classmethod
    def linear(cls, root: int) -> "Polynomial":
        """(t - root)"""
        return cls((-root, 1))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls([0] * power + [coefficient])

    @classmethod
    def from_descending(
        cls, coefficients: typing.Iterable[int | typing.Text]
    ) -> "Polynomial":
        return cls(reversed([int(c) for c in coefficients]))

    # Accessors
    @property
    def coefficients(self) -> typing.Tuple[int, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coefficients[-1] if self._coefficients else 0

    def is_zero(self) -> bool:
        return not self._coefficients

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self._coefficients):
            return self._coefficients[power]
        return 0

    def lowest_power(self) -> int | None:
        for i, c in enumerate(self._coefficients):
            if c != 0:
                return i
        return None

    def to_descending(self) -> typing.List[typing.Text]:
        return [str(c) for c in reversed(self._coefficients)]

    # Ring operations
    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Polynomial(res)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coefficients)

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        a, b = self._coefficients, other._coefficients
        if not a or not b:
            return _ZERO
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return Polynomial(res)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative exponents are not supported")
        result = _ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Long division over Z that must leave no remainder."""
        if divisor.is_zero():
            raise DivisionByZeroError("Division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        if divisor.degree > self.degree:
            raise InexactDivisionError(
                f"Cannot divide a degree {self.degree} polynomial "
                + f"by a degree {divisor.degree} polynomial exactly"
            )

        remainder = list(self._coefficients)
        d = divisor._coefficients
        lead = d[-1]
        quotient = [0] * (len(remainder) - len(d) + 1)
        for shift in range(len(quotient) - 1, -1, -1):
            top = remainder[shift + len(d) - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r != 0:
                raise InexactDivisionError(
                    f"Leading coefficient {top} is not divisible by {lead}"
                )
            quotient[shift] = q
            for i, c in enumerate(d):
                remainder[shift + i] -= q * c

        if any(remainder):
            raise InexactDivisionError(
                f"Division of ({self.to_text()}) by ({divisor.to_text()}) "
                + "leaves a nonzero remainder"
            )
        return Polynomial(quotient)

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return self.exact_div(divisor)

    def eval(self, t: int) -> int:
        """Horner evaluation."""
        acc = 0
        for c in reversed(self._coefficients):
            acc = acc * t + c
        return acc

    __call__ = eval

    def coefficient_sum(self) -> int:
        return sum(self._coefficients)

    # Value semantics
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coefficients == other._coefficients
        if isinstance(other, int) and not isinstance(other, bool):
            return self._coefficients == _normalize((other,))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coefficients)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # Rendering
    def to_text(self, variable: typing.Text = VARIABLE) -> typing.Text:
        """Descending powers, explicit signs, `t^k` notation."""
        if not self._coefficients:
            return "0"
        parts: typing.List[typing.Text] = []
        for power in range(self.degree, -1, -1):
            c = self._coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                mono = variable if power == 1 else f"{variable}^{power}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(f"-{body}" if sign == "-" else body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: typing.Text, variable: typing.Text = VARIABLE) -> "Polynomial":
        """Parse an expanded polynomial such as `t^3 - 3t^{2} + 2t`."""
        cleaned = (
            text.replace("−", "-")
            .replace("{", "")
            .replace("}", "")
            .replace("*", "")
        )
        cleaned = re.sub(r"\s+", "", cleaned)
        if not cleaned:
            raise ValueError("Empty polynomial text")
        if cleaned[0] not in "+-":
            cleaned = "+" + cleaned

        term_re = re.compile(
            rf"([+-])(\d*)({re.escape(variable)}(?:\^(\d+))?)?"
        )
        coefs: typing.Dict[int, int] = {}
        pos = 0
        while pos < len(cleaned):
            match = term_re.match(cleaned, pos)
            if match is None or match.end() == pos or (
                not match.group(2) and not match.group(3)
            ):
                raise ValueError(f"Cannot parse polynomial near {cleaned[pos:]!r}")
            sign = -1 if match.group(1) == "-" else 1
            mag = int(match.group(2)) if match.group(2) else 1
            if match.group(3) is None:
                power = 0
            elif match.group(4) is None:
                power = 1
            else:
                power = int(match.group(4))
            coefs[power] = coefs.get(power, 0) + sign * mag
            pos = match.end()

        size = max(coefs) + 1
        return cls(coefs.get(i, 0) for i in range(size))


def _coerce(value: "Polynomial | int") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial((value,))
    raise TypeError(f"Cannot use {type(value).__name__} as a polynomial")


_ZERO: typing.Final[Polynomial] = Polynomial(())
_ONE: typing.Final[Polynomial] = Polynomial((1,))
_T: typing.Final[Polynomial] = Polynomial((0, 1))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    return p.exact_div(q)


def evaluate(p: Polynomial, t: int) -> int:
    return p.eval(t)


@functools.lru_cache(maxsize=128)
def falling_factorial(n: int) -> Polynomial:
    """t(t-1)...(t-n+1); the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result = _ONE
    for k in range(n):
        result = result * Polynomial.linear(k)
    return result

