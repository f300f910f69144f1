"""Exact multivariate integer polynomials and their two input formats.

Polynomials are sparse maps from exponent tuples to nonzero arbitrary
precision integers, immutable after construction.  Two text formats are
supported: a small expression language (sums/products/powers/parentheses
plus a simultaneous `subst`), and a whitespace-tolerant integer term
stream terminated by '/' (one coefficient and one exponent per variable
per term).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .monomials import monomial_index

DEFAULT_VARIABLES = ("x", "y", "z", "u", "v")

MAX_EXPONENT = 2**31 - 1
DEFAULT_MAX_TERMS = 300


class PolynomialError(Exception):
    """Base class for polynomial input and validation failures."""


class ExpressionError(PolynomialError):
    """Syntax or semantic error in the expression language."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TermListError(PolynomialError):
    """Malformed term-list stream."""


class NonHomogeneousError(PolynomialError):
    """Terms of two different total degrees were found."""

    def __init__(self, term_a: str, degree_a: int, term_b: str, degree_b: int):
        super().__init__(
            f"not homogeneous: term {term_a} has degree {degree_a} "
            f"but term {term_b} has degree {degree_b}"
        )


class ZeroPolynomialError(PolynomialError):
    """The zero polynomial has no well-defined degree."""


class VariableCountError(PolynomialError):
    """Operation requires a different number of variables."""


class Polynomial:
    """Sparse polynomial with integer coefficients over named variables.

    `terms` maps exponent tuples (one entry per variable) to nonzero
    integers.  Instances never mutate; all arithmetic returns new objects
    and is exact.
    """

    __slots__ = ("variables", "_terms")

    def __init__(
        self,
        variables: Iterable[str],
        terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = (),
    ):
        names = tuple(variables)
        if len(names) < 2:
            raise VariableCountError(f"need at least 2 variables, got {len(names)}")
        if len(set(names)) != len(names):
            raise VariableCountError(f"duplicate variable names in {names}")
        self.variables = names
        clean: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponents, coefficient in items:
            key = tuple(exponents)
            if len(key) != len(names):
                raise PolynomialError(
                    f"exponent vector {key} has length {len(key)}, expected {len(names)}"
                )
            if any(a < 0 for a in key):
                raise PolynomialError(f"negative exponent in {key}")
            value = clean.get(key, 0) + coefficient
            if value:
                clean[key] = value
            elif key in clean:
                del clean[key]
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Iterable[str], value: int) -> "Polynomial":
        names = tuple(variables)
        return cls(names, {(0,) * len(names): value} if value else {})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "Polynomial":
        names = tuple(variables)
        if name not in names:
            raise PolynomialError(f"unknown variable {name!r}")
        exponents = tuple(1 if v == name else 0 for v in names)
        return cls(names, {exponents: 1})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Raw (exponents, coefficient) pairs in unspecified order."""
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: by total degree, then monomial rank."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), monomial_index(kv[0])))

    def total_degree(self) -> int | None:
        """Maximal term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise PolynomialError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(self.variables, other)
        self._require_same_ring(other)
        out = dict(self._terms)
        for key, value in other._terms.items():
            new = out.get(key, 0) + value
            if new:
                out[key] = new
            elif key in out:
                del out[key]
        return Polynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(self.variables, other)
        return self + (-other)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.variables)
            return Polynomial(self.variables, {k: other * v for k, v in self._terms.items()})
        self._require_same_ring(other)
        out: dict[tuple[int, ...], int] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                new = out.get(key, 0) + va * vb
                if new:
                    out[key] = new
                elif key in out:
                    del out[key]
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.constant(self.variables, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # -- calculus and substitution ------------------------------------------

    def partial(self, j: int) -> "Polynomial":
        """Formal partial derivative with respect to the j-th variable."""
        if not 0 <= j < len(self.variables):
            raise PolynomialError(f"variable index {j} out of range")
        out: dict[tuple[int, ...], int] = {}
        for key, value in self._terms.items():
            a = key[j]
            if a == 0:
                continue
            lowered = key[:j] + (a - 1,) + key[j + 1 :]
            new = out.get(lowered, 0) + a * value
            if new:
                out[lowered] = new
            elif lowered in out:
                del out[lowered]
        return Polynomial(self.variables, out)

    def substitute(self, replacements: Mapping[str, "Polynomial | int"]) -> "Polynomial":
        """Simultaneously replace variables by polynomials.

        Every substitution reads the original polynomial; variables not
        listed map to themselves.
        """
        images: list[Polynomial] = []
        for name in self.variables:
            image = replacements.get(name)
            if image is None:
                image = Polynomial.variable(self.variables, name)
            elif isinstance(image, int):
                image = Polynomial.constant(self.variables, image)
            else:
                self._require_same_ring(image)
            images.append(image)
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, n: int) -> Polynomial:
            cached = power_cache.get((i, n))
            if cached is None:
                cached = images[i] ** n
                power_cache[(i, n)] = cached
            return cached

        result = Polynomial.zero(self.variables)
        for key, value in self._terms.items():
            term = Polynomial.constant(self.variables, value)
            for i, a in enumerate(key):
                if a:
                    term = term * power(i, a)
            result = result + term
        return result

    # -- rendering -----------------------------------------------------------

    def _render_monomial(self, exponents: tuple[int, ...]) -> str:
        parts = []
        for name, a in zip(self.variables, exponents):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponents, coefficient in self.sorted_terms():
            monomial = self._render_monomial(exponents)
            magnitude = abs(coefficient)
            if monomial:
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            else:
                body = str(magnitude)
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.variables!r}, {len(self._terms)} terms)"


def partial_derivative(poly: Polynomial, j: int) -> Polynomial:
    """Exact formal partial derivative of `poly` by its j-th variable."""
    return poly.partial(j)


def check_homogeneous(poly: Polynomial) -> int:
    """Return the common total degree of all terms, or raise.

    Raises ZeroPolynomialError on the zero polynomial and
    NonHomogeneousError (naming two offending terms) otherwise.
    """
    if poly.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no degree")
    first_key = None
    degree = None
    for key, _ in poly.items():
        e = sum(key)
        if degree is None:
            first_key, degree = key, e
        elif e != degree:
            render = poly._render_monomial
            raise NonHomogeneousError(render(first_key) or "1", degree, render(key) or "1", e)
    assert degree is not None
    return degree


@dataclass(frozen=True)
class HomogeneousForm:
    """A polynomial certified homogeneous of the stated degree."""

    poly: Polynomial
    degree: int

    def __post_init__(self):
        d = check_homogeneous(self.poly)
        if d != self.degree:
            raise NonHomogeneousError(str(self.poly), d, "<declared degree>", self.degree)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "HomogeneousForm":
        return cls(poly, check_homogeneous(poly))

    @property
    def variables(self) -> tuple[str, ...]:
        return self.poly.variables

    @property
    def variable_count(self) -> int:
        return len(self.poly.variables)


# -- expression language ------------------------------------------------------
#
#   expression := ['-'] term (('+'|'-') term)*
#   term       := factor ('*' factor)*
#   factor     := atom ('^' POSINT)*
#   atom       := INTEGER | VAR | '(' expression ')'
#               | 'subst' '(' expression (',' VAR ',' expression)+ ')'


class _ExpressionParser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.pos = 0
        self.variables = variables

    def fail(self, message: str, position: int | None = None):
        raise ExpressionError(message, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, symbol: str) -> bool:
        if self.peek() == symbol:
            self.pos += 1
            return True
        return False

    def expect(self, symbol: str) -> None:
        if not self.accept(symbol):
            self.fail(f"expected {symbol!r}")

    def read_integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start : self.pos])

    def read_name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            self.fail("expected a name")
        return self.text[start : self.pos], start

    def parse(self) -> Polynomial:
        result = self.expression()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(f"unexpected input {self.text[self.pos]!r}")
        return result

    def expression(self) -> Polynomial:
        negate = self.accept("-")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.accept("*"):
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        result = self.atom()
        while self.accept("^"):
            at = self.pos
            n = self.read_integer()
            if n < 1:
                self.fail("exponent must be positive", at)
            if n > MAX_EXPONENT:
                self.fail(f"exponent overflow: {n} > {MAX_EXPONENT}", at)
            result = result**n
        return result

    def atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expression()
            self.expect(")")
            return inner
        if ch.isdigit():
            return Polynomial.constant(self.variables, self.read_integer())
        if ch.isalpha() or ch == "_":
            name, at = self.read_name()
            if name == "subst":
                return self.subst_call()
            if name not in self.variables:
                self.fail(f"unknown variable {name!r}", at)
            return Polynomial.variable(self.variables, name)
        self.fail("expected a number, variable, or '('" if ch else "unexpected end of input")

    def subst_call(self) -> Polynomial:
        self.expect("(")
        target = self.expression()
        replacements: dict[str, Polynomial] = {}
        while self.accept(","):
            name, at = self.read_name()
            if name not in self.variables:
                self.fail(f"unknown variable {name!r}", at)
            if name in replacements:
                self.fail(f"variable {name!r} substituted twice", at)
            self.expect(",")
            replacements[name] = self.expression()
        if not replacements:
            self.fail("subst needs at least one variable/value pair")
        self.expect(")")
        return target.substitute(replacements)


def parse_expression(text: str, variables: Iterable[str] = DEFAULT_VARIABLES) -> Polynomial:
    """Parse and fully expand an expression over the given variables.

    The grammar supports integer literals, variables, +, -, *, ^ with a
    positive integer exponent, parentheses, a leading unary minus, and
    subst(expr, var, expr, ...) performing simultaneous substitution.
    All arithmetic is exact over the integers.
    """
    if not text.isascii():
        raise ExpressionError("expression must be ASCII", 0)
    return _ExpressionParser(text, tuple(variables)).parse()


# -- term-list format ---------------------------------------------------------


def parse_term_list(
    data: bytes | str,
    variables: Iterable[str] = DEFAULT_VARIABLES,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> Polynomial:
    """Parse the '/'-terminated integer term stream.

    Each term is one signed coefficient followed by one exponent per
    variable; any characters other than digits, '-' and '/' act as
    separators and are otherwise ignored.  All terms must share one total
    degree; duplicate exponent vectors are summed.
    """
    names = tuple(variables)
    text = data.decode("ascii", errors="replace") if isinstance(data, bytes) else data
    numbers: list[int] = []
    terminated = False
    negative = False
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "/":
            terminated = True
            break
        if ch == "-":
            negative = True
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            value = int(text[start:i])
            numbers.append(-value if negative else value)
            negative = False
            continue
        i += 1
    if not terminated:
        raise TermListError("unexpected end of stream: missing '/' terminator")
    if negative:
        raise TermListError("dangling '-' with no following number")
    width = len(names) + 1
    if len(numbers) % width != 0:
        raise TermListError(
            f"incomplete term before '/': got {len(numbers)} numbers, "
            f"expected a multiple of {width}"
        )
    if len(numbers) // width > max_terms:
        raise TermListError(f"too many terms: {len(numbers) // width} > {max_terms}")
    terms = []
    degree = None
    for k in range(0, len(numbers), width):
        coefficient = numbers[k]
        exponents = tuple(numbers[k + 1 : k + width])
        if any(a < 0 for a in exponents):
            raise TermListError(f"negative exponent in term {numbers[k:k + width]}")
        e = sum(exponents)
        if degree is None:
            degree = e
        elif e != degree:
            raise TermListError(f"degree error: term {numbers[k:k + width]} has degree {e}, expected {degree}")
        terms.append((exponents, coefficient))
    return Polynomial(names, terms)


def emit_term_list(poly: Polynomial) -> bytes:
    """Serialize to the term-list format, terms in canonical order.

    Round-trips exactly through parse_term_list.
    """
    lines = [
        " ".join([str(coefficient), *map(str, exponents)])
        for exponents, coefficient in poly.sorted_terms()
    ]
    text = "\n".join(lines) + (" /" if lines else "/")
    return text.encode("ascii")
