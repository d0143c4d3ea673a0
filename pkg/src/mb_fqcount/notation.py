"""Text notation for fields, equations and sweep ranges.

Fields are written ``p`` or ``p^s``. Equations are a family keyword followed by ``key=value`` fields::

    diag a=1,2,3 m=2,3,4
    carlitz a=1,1 m=1,2 k=1 b=1 kv=1,1
    qh terms=1:2,0;1:0,3 rv=3,2 r=6 b=1 kv=1,1

Coefficients are element indices in enumeration order; a ``qh`` term is ``coeff:e1,...,en``.
"""

import re

from sympy import factorint

from mb_fqcount.equations import CarlitzEquation, DiagonalEquation, Equation, QuasiHomogeneousEquation
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import DEFAULT_FIELD_CAP, FieldElement, FieldSpec, make_field

_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")
_RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")

_REQUIRED_KEYS = {
    "diag": {"a", "m"},
    "carlitz": {"a", "m", "k", "b", "kv"},
    "qh": {"terms", "rv", "r", "b", "kv"},
}


def _parse_error(message: str) -> FqCountError:
    return FqCountError("parse_error", message)


def parse_field(text: str, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """Parse ``7`` or ``3^2`` and build the field.

    Raises:
        FqCountError: malformed text (code: ``parse_error``) or any ``make_field`` error.

    """
    match = _FIELD_RE.match(text)
    if match is None:
        raise _parse_error(f"Invalid field '{text}': expected 'p' or 'p^s'.")
    p, s = int(match.group(1)), int(match.group(2) or 1)
    return make_field(p, s, cap=cap)


def _ints(key: str, value: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in value.split(","))
    except ValueError:
        raise _parse_error(f"'{key}' must be a comma-separated list of integers, got '{value}'.") from None


def _int(key: str, value: str) -> int:
    values = _ints(key, value)
    if len(values) != 1:
        raise _parse_error(f"'{key}' must be a single integer, got '{value}'.")
    return values[0]


def _elements(field: FieldSpec, key: str, value: str) -> tuple[FieldElement, ...]:
    return tuple(field.element(i) for i in _ints(key, value))


def _terms(field: FieldSpec, value: str) -> tuple[tuple[FieldElement, tuple[int, ...]], ...]:
    terms: list[tuple[FieldElement, tuple[int, ...]]] = []
    for item in value.split(";"):
        coeff, sep, exponents = item.partition(":")
        if not sep:
            raise _parse_error(f"Term '{item}' must look like 'coeff:e1,...,en'.")
        terms.append((field.element(_int("terms", coeff)), _ints("terms", exponents)))
    return tuple(terms)


def parse_equation(text: str, field: FieldSpec) -> Equation:
    """Parse an equation in the notation described in the module docstring.

    Raises:
        FqCountError: syntax errors (code: ``parse_error``), bad coefficient indices (code: ``invalid_element``),
            or shape errors (code: ``invalid_equation``).

    """
    words = text.split()
    if not words:
        raise _parse_error("Empty equation.")
    family, fields = words[0], words[1:]
    if family not in _REQUIRED_KEYS:
        raise _parse_error(f"Unknown equation family '{family}': expected one of {', '.join(_REQUIRED_KEYS)}.")
    values: dict[str, str] = {}
    for word in fields:
        key, sep, value = word.partition("=")
        if not sep or not value:
            raise _parse_error(f"Expected 'key=value', got '{word}'.")
        if key in values:
            raise _parse_error(f"Duplicate key '{key}'.")
        values[key] = value
    missing = _REQUIRED_KEYS[family] - values.keys()
    unknown = values.keys() - _REQUIRED_KEYS[family]
    if missing or unknown:
        detail = "; ".join(
            part
            for part in (
                f"missing {', '.join(sorted(missing))}" if missing else "",
                f"unknown {', '.join(sorted(unknown))}" if unknown else "",
            )
            if part
        )
        raise _parse_error(f"Invalid '{family}' equation: {detail}.")

    if family == "diag":
        return DiagonalEquation(a=_elements(field, "a", values["a"]), m=_ints("m", values["m"]))
    b = field.element(_int("b", values["b"]))
    kv = _ints("kv", values["kv"])
    if family == "carlitz":
        return CarlitzEquation(
            a=_elements(field, "a", values["a"]), m=_ints("m", values["m"]), k=_int("k", values["k"]), b=b, kv=kv
        )
    return QuasiHomogeneousEquation(
        terms=_terms(field, values["terms"]), r=_int("r", values["r"]), rv=_ints("rv", values["rv"]), b=b, kv=kv
    )


def _join(values: tuple[int, ...]) -> str:
    return ",".join(map(str, values))


def format_equation(eq: Equation) -> str:
    """Render an equation back into the notation ``parse_equation`` reads."""
    if isinstance(eq, DiagonalEquation):
        return f"diag a={_join(tuple(a.index for a in eq.a))} m={_join(eq.m)}"
    if isinstance(eq, CarlitzEquation):
        a = _join(tuple(x.index for x in eq.a))
        return f"carlitz a={a} m={_join(eq.m)} k={eq.k} b={eq.b.index} kv={_join(eq.kv)}"
    terms = ";".join(f"{coeff.index}:{_join(exponents)}" for coeff, exponents in eq.terms)
    return f"qh terms={terms} rv={_join(eq.rv)} r={eq.r} b={eq.b.index} kv={_join(eq.kv)}"


def parse_q_list(text: str) -> list[tuple[int, int]]:
    """Parse ``3,5,9`` or ``3,3^2`` into (p, s) pairs.

    Raises:
        FqCountError: empty list (code: ``empty_range``) or an entry that is not a prime power (code: ``parse_error``).

    """
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise FqCountError("empty_range", "The q list is empty.")
    result: list[tuple[int, int]] = []
    for item in items:
        match = _FIELD_RE.match(item)
        if match is None:
            raise _parse_error(f"Invalid q '{item}'.")
        base, exponent = int(match.group(1)), int(match.group(2) or 1)
        factors = factorint(base) if base > 1 else {}
        if len(factors) != 1:
            raise _parse_error(f"{item.strip()} is not a prime power.")
        ((p, power),) = factors.items()
        result.append((int(p), int(power) * exponent))
    return result


def parse_n_range(text: str) -> range:
    """Parse ``2-4`` (inclusive) or ``3``.

    Raises:
        FqCountError: malformed text (code: ``parse_error``) or an empty range (code: ``empty_range``).

    """
    match = _RANGE_RE.match(text)
    if match is None:
        raise _parse_error(f"Invalid range '{text}': expected 'n' or 'lo-hi'.")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise FqCountError("empty_range", f"Range '{text}' is empty.")
    return range(lo, hi + 1)
