"""Exact ladder-operator calculus on the monomial basis.

The operators here act degree-wise on the tower {x^n} with rational
parameters, and every action is carried out in exact arithmetic (stdlib
``Fraction``, or Gaussian rationals for complex scalars).  That makes the
algebraic identities testable as exact equalities rather than tolerance
checks:

* Laguerre-class operators K+, K-, K3 close into an su(1,1) algebra,
  [K+, K-] = -2 K3 and [K3, K+-] = +- K+-.
* The conjugate raising operators Kt+ (one per class) satisfy the canonical
  pair relation [K-, Kt+] = 1.
* Re-summing the terminating operator exponential exp(-K-) x^n regenerates
  the Laguerre polynomials and the terminating hypergeometric polynomials
  coefficient-by-coefficient.

Inverse factors such as 1/(D+lam) are defined only degree-wise; applying an
operator at a degree where its denominator vanishes raises
``DegenerateParameterError`` naming the offending degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "DegenerateParameterError",
    "GaussianRational",
    "MonoPoly",
    "monomial",
    "OpKind",
    "LadderOp",
    "apply",
    "commutator",
    "laguerre_from_operator",
    "hyp_from_operator",
    "algebra_report",
]


class DegenerateParameterError(ValueError):
    """An operator denominator vanished at some monomial degree."""

    def __init__(self, op_name: str, degree: int, detail: str):
        self.op_name = op_name
        self.degree = degree
        super().__init__(f"{op_name} is degenerate at degree {degree}: {detail}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def from_number(cls, z) -> "GaussianRational":
        if isinstance(z, GaussianRational):
            return z
        if isinstance(z, complex):
            return cls(Fraction(z.real), Fraction(z.imag))
        return cls(Fraction(z), Fraction(0))

    def __add__(self, other):
        other = GaussianRational.from_number(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.from_number(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        other = GaussianRational.from_number(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus."""
        return self.re * self.re + self.im * self.im


ExactScalar = Union[Fraction, GaussianRational]


def _to_exact(value) -> ExactScalar:
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, complex):
        return GaussianRational.from_number(value)
    return Fraction(value)


def _scalar_abs2(value: ExactScalar) -> Fraction:
    if isinstance(value, GaussianRational):
        return value.abs2()
    return value * value


@dataclass(frozen=True)
class MonoPoly:
    """Polynomial over the monomial basis with exact coefficients.

    ``coeffs[k]`` multiplies x^k; trailing zeros are trimmed so that equal
    polynomials compare equal.
    """

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "MonoPoly":
        cs = [_to_exact(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "MonoPoly":
        return cls(())

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "MonoPoly") -> "MonoPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MonoPoly.from_coeffs(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __sub__(self, other: "MonoPoly") -> "MonoPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MonoPoly.from_coeffs(
            [self.coeff(k) - other.coeff(k) for k in range(n)]
        )

    def __neg__(self) -> "MonoPoly":
        return MonoPoly(tuple(-c for c in self.coeffs))

    def scale(self, s) -> "MonoPoly":
        s = _to_exact(s)
        return MonoPoly.from_coeffs([s * c for c in self.coeffs])

    def eval_exact(self, x):
        """Evaluate at an exact point by Horner's rule."""
        x = _to_exact(x)
        acc: ExactScalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coeff_norm2(self) -> Fraction:
        """Exact squared l2 norm of the coefficient vector."""
        return sum((_scalar_abs2(c) for c in self.coeffs), Fraction(0))


def monomial(degree: int, coeff=1) -> MonoPoly:
    """The polynomial coeff * x^degree."""
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    return MonoPoly.from_coeffs([0] * degree + [coeff])


class OpKind(Enum):
    K_PLUS = "K+"
    K_MINUS = "K-"
    K3 = "K3"
    K_TILDE_PLUS = "Kt+"
    HYP_K_MINUS = "hypK-"
    HYP_K_TILDE_PLUS = "hypKt+"


@dataclass(frozen=True)
class LadderOp:
    """A ladder operator with exact rational parameters.

    Laguerre-class kinds carry ``lam``; hypergeometric-class kinds carry
    ``b`` and ``c``.  Use the factory classmethods.
    """

    kind: OpKind
    lam: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None

    @classmethod
    def k_plus(cls, lam) -> "LadderOp":
        return cls(OpKind.K_PLUS, lam=Fraction(lam))

    @classmethod
    def k_minus(cls, lam) -> "LadderOp":
        return cls(OpKind.K_MINUS, lam=Fraction(lam))

    @classmethod
    def k3(cls, lam) -> "LadderOp":
        return cls(OpKind.K3, lam=Fraction(lam))

    @classmethod
    def k_tilde_plus(cls, lam) -> "LadderOp":
        return cls(OpKind.K_TILDE_PLUS, lam=Fraction(lam))

    @classmethod
    def hyp_k_minus(cls, b, c) -> "LadderOp":
        return cls(OpKind.HYP_K_MINUS, b=Fraction(b), c=Fraction(c))

    @classmethod
    def hyp_k_tilde_plus(cls, b, c) -> "LadderOp":
        return cls(OpKind.HYP_K_TILDE_PLUS, b=Fraction(b), c=Fraction(c))

    def name(self) -> str:
        return self.kind.value

    def _action(self, n: int) -> tuple[Fraction, int]:
        """Return (factor, new_degree) for the action on x^n."""
        kind = self.kind
        if kind is OpKind.K_PLUS:
            return Fraction(1), n + 1
        if kind is OpKind.K_MINUS:
            return Fraction(n) * (n + self.lam), n - 1
        if kind is OpKind.K3:
            return n + (self.lam + 1) / 2, n
        if kind is OpKind.K_TILDE_PLUS:
            den = n + 1 + self.lam
            if den == 0:
                raise DegenerateParameterError(
                    self.name(), n, f"n + 1 + lam = 0 with lam = {self.lam}"
                )
            return 1 / den, n + 1
        if kind is OpKind.HYP_K_MINUS:
            if n == 0:
                return Fraction(0), -1
            den = n - 1 + self.b
            if den == 0:
                raise DegenerateParameterError(
                    self.name(), n, f"n - 1 + b = 0 with b = {self.b}"
                )
            return Fraction(n) * (n - 1 + self.c) / den, n - 1
        if kind is OpKind.HYP_K_TILDE_PLUS:
            den = n + self.c
            if den == 0:
                raise DegenerateParameterError(
                    self.name(), n, f"n + c = 0 with c = {self.c}"
                )
            return (n + self.b) / den, n + 1
        raise AssertionError(f"unhandled operator kind {kind}")  # pragma: no cover

    def __call__(self, p: MonoPoly) -> MonoPoly:
        return apply(self, p)


def apply(op: LadderOp, p: MonoPoly) -> MonoPoly:
    """Apply a ladder operator to a polynomial, exactly."""
    if p.is_zero():
        return MonoPoly.zero()
    out = [Fraction(0)] * (p.degree + 2)
    for n, cn in enumerate(p.coeffs):
        if not cn:
            continue
        factor, m = op._action(n)
        if m < 0 or not factor:
            continue
        out[m] = out[m] + cn * factor
    return MonoPoly.from_coeffs(out)


def commutator(op_a: LadderOp, op_b: LadderOp, p: MonoPoly) -> MonoPoly:
    """(op_a op_b - op_b op_a) applied to p, exactly."""
    return apply(op_a, apply(op_b, p)) - apply(op_b, apply(op_a, p))


def laguerre_from_operator(n: int, lam) -> MonoPoly:
    """Exact L_n^lam from the terminating operator-exponential form.

    Expands ((-1)^n / n!) exp(-K-) x^n where K- = x d^2/dx^2 + (lam+1) d/dx.
    Each application of K- lowers the degree by one, so the exponential
    terminates after n terms and the result is an exact coefficient vector.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    lam = Fraction(lam)
    if lam.denominator == 1 and -n <= lam <= -1:
        raise DegenerateParameterError("exp(-K-)", n, f"lam = {lam} is a negative integer in [-{n}, -1]")
    k_minus = LadderOp.k_minus(lam)
    term = monomial(n)
    total = term
    for k in range(1, n + 1):
        term = apply(k_minus, term).scale(Fraction(-1, k))
        total = total + term
    return total.scale(Fraction((-1) ** n, math.factorial(n)))


def hyp_from_operator(n: int, b, c) -> MonoPoly:
    """Exact terminating hypergeometric polynomial F(-n, b; c; z).

    Expands the terminating exponential exp(-K-) z^n for the
    hypergeometric-class lowering operator and applies the closed prefactor
    (-1)^n (b)_n / (c)_n so the result matches the series normalization
    F(-n, b; c; 0) = 1.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    b = Fraction(b)
    c = Fraction(c)
    for j in range(n):
        if b + j == 0:
            raise DegenerateParameterError("exp(-hypK-)", j + 1, f"b = {b} hits b + {j} = 0")
        if c + j == 0:
            raise DegenerateParameterError("prefactor (c)_n", j + 1, f"c = {c} hits c + {j} = 0")
    k_minus = LadderOp.hyp_k_minus(b, c)
    term = monomial(n)
    total = term
    for k in range(1, n + 1):
        term = apply(k_minus, term).scale(Fraction(-1, k))
        total = total + term
    pref = Fraction((-1) ** n)
    for j in range(n):
        pref *= (b + j) / (c + j)
    return total.scale(pref)


def _identity_entry(name: str, passed: bool, max_degree: int, failures: list) -> dict:
    entry = {
        "identity": name,
        "degrees": f"0..{max_degree}",
        "passed": passed,
    }
    if failures:
        entry["first_failure_degree"] = failures[0]
    return entry


def algebra_report(lam, hyp_b, hyp_c, max_degree: int, _tamper: bool = False) -> dict:
    """Check the operator algebra identities on monomials up to max_degree.

    Verifies, with exact rational equality on every x^n (n <= max_degree):
    [K+, K-] = -2 K3, [K3, K+] = K+, [K3, K-] = -K-, and the canonical
    pairs [K-, Kt+] = 1 for both operator classes.

    ``_tamper`` is an internal negative-control hook that deliberately
    mis-parameterizes K3; it must make the suite fail.
    """
    if max_degree < 1:
        raise ValueError(f"max_degree must be >= 1, got {max_degree}")
    lam = Fraction(lam)
    hyp_b = Fraction(hyp_b)
    hyp_c = Fraction(hyp_c)

    kp = LadderOp.k_plus(lam)
    km = LadderOp.k_minus(lam)
    k3 = LadderOp.k3(lam + 1 if _tamper else lam)
    ktp = LadderOp.k_tilde_plus(lam)
    hkm = LadderOp.hyp_k_minus(hyp_b, hyp_c)
    hktp = LadderOp.hyp_k_tilde_plus(hyp_b, hyp_c)

    checks = [
        ("[K+, K-] = -2 K3", lambda p: commutator(kp, km, p), lambda p: apply(k3, p).scale(-2)),
        ("[K3, K+] = K+", lambda p: commutator(k3, kp, p), lambda p: apply(kp, p)),
        ("[K3, K-] = -K-", lambda p: commutator(k3, km, p), lambda p: -apply(km, p)),
        ("[K-, Kt+] = 1", lambda p: commutator(km, ktp, p), lambda p: p),
        ("[hypK-, hypKt+] = 1", lambda p: commutator(hkm, hktp, p), lambda p: p),
    ]

    identities = []
    for name, lhs, rhs in checks:
        failures = []
        for n in range(max_degree + 1):
            p = monomial(n)
            if lhs(p) != rhs(p):
                failures.append(n)
        identities.append(_identity_entry(name, not failures, max_degree, failures))

    return {
        "lambda": str(lam),
        "b": str(hyp_b),
        "c": str(hyp_c),
        "max_degree": max_degree,
        "identities": identities,
        "all_passed": all(e["passed"] for e in identities),
    }
