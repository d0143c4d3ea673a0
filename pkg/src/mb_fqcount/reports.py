"""Report models and their JSON/TSV encodings."""

from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

TSV_COUNT_HEADER = ("q", "n", "value", "method", "restricted", "hypotheses")
TSV_SWEEP_HEADER = ("q", "n", "equation", "hypotheses", "method", "formula", "brute", "match")


class CountMethod(StrEnum):
    """How a count was obtained."""

    BRUTE = "brute"
    THM1 = "thm1"
    COR1 = "cor1"
    THM2 = "thm2"
    THM3 = "thm3"
    THM4 = "thm4"
    BAOULINA = "baoulina"
    QUASIHOMOG = "quasihomog"


class Hypothesis(BaseModel):
    """One evaluated condition."""

    model_config = ConfigDict(frozen=True)

    name: str
    holds: bool


def encode_hypotheses(hypotheses: tuple[Hypothesis, ...]) -> str:
    """Render the ledger as ``name=1,name=0``."""
    return ",".join(f"{h.name}={int(h.holds)}" for h in hypotheses)


def decode_hypotheses(text: str) -> tuple[Hypothesis, ...]:
    """Inverse of ``encode_hypotheses``."""
    if not text:
        return ()
    result: list[Hypothesis] = []
    for item in text.split(","):
        name, _, flag = item.partition("=")
        if flag not in ("0", "1"):
            raise ValueError(f"Malformed hypothesis entry '{item}'.")
        result.append(Hypothesis(name=name, holds=flag == "1"))
    return tuple(result)


class CountReport(BaseModel):
    """A count with the method that produced it and the hypotheses evaluated on the way."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=2)
    n: int = Field(ge=1)
    value: int = Field(ge=0)
    method: CountMethod
    restricted: bool
    hypotheses: tuple[Hypothesis, ...] = ()

    @model_validator(mode="after")
    def _value_in_range(self) -> CountReport:
        bound = (self.q - 1) ** self.n if self.restricted else self.q**self.n
        if self.value > bound:
            raise ValueError(f"Count {self.value} exceeds the number of candidate tuples {bound}.")
        return self

    def to_json(self) -> str:
        """Serialize to a compact JSON object."""
        return self.model_dump_json()

    @classmethod
    def from_json(cls, data: str) -> CountReport:
        """Parse a JSON object produced by ``to_json``."""
        return cls.model_validate_json(data)

    def to_tsv_row(self) -> str:
        """Serialize to one tab-separated row in ``TSV_COUNT_HEADER`` order."""
        cells = (self.q, self.n, self.value, self.method.value, int(self.restricted), encode_hypotheses(self.hypotheses))
        return "\t".join(str(c) for c in cells)

    @classmethod
    def from_tsv_row(cls, row: str) -> CountReport:
        """Parse a row produced by ``to_tsv_row``."""
        q, n, value, method, restricted, hypotheses = row.rstrip("\n").split("\t")
        return cls(
            q=int(q),
            n=int(n),
            value=int(value),
            method=CountMethod(method),
            restricted=restricted == "1",
            hypotheses=decode_hypotheses(hypotheses),
        )


class VerifyReport(BaseModel):
    """Formula path against the brute-force path for one equation."""

    model_config = ConfigDict(frozen=True)

    q: int
    n: int
    restricted: bool
    formula_method: CountMethod | None
    formula_value: int | None
    brute_value: int
    match: bool | None  # None when no formula applies
    hypotheses: tuple[Hypothesis, ...] = ()

    @property
    def ok(self) -> bool:
        """True unless a formula applied and disagreed with enumeration."""
        return self.match is not False


class SweepRow(BaseModel):
    """One (field, equation instance) row of a sweep."""

    model_config = ConfigDict(frozen=True)

    q: int
    n: int
    equation: str
    hypotheses: tuple[Hypothesis, ...]
    method: CountMethod | None
    formula: int | None
    brute: int | None  # None when the row exceeds the per-row cap
    match: bool | None

    def to_tsv_row(self) -> str:
        """Serialize in ``TSV_SWEEP_HEADER`` order; absent values are empty cells."""
        cells = (
            self.q,
            self.n,
            self.equation,
            encode_hypotheses(self.hypotheses),
            "" if self.method is None else self.method.value,
            "" if self.formula is None else self.formula,
            "" if self.brute is None else self.brute,
            "" if self.match is None else int(self.match),
        )
        return "\t".join(str(c) for c in cells)


class IdentityEntry(BaseModel):
    """One identity with both sides as exact rationals."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    lhs: Fraction
    rhs: Fraction
    holds: bool

    @field_validator("lhs", "rhs", mode="before")
    @classmethod
    def _parse_fraction(cls, value: object) -> Fraction:
        if isinstance(value, (int, str, Fraction)):
            return Fraction(value)
        raise ValueError(f"Not a rational number: {value!r}.")

    @field_serializer("lhs", "rhs")
    def _format_fraction(self, value: Fraction) -> str:
        return str(value)


class CertificateEntry(BaseModel):
    """Summary of one verified bijection between fibers."""

    model_config = ConfigDict(frozen=True)

    source_c: int
    target_c: int
    source_size: int
    target_size: int
    pairs_stored: bool
    digest: str


class BijectionReport(BaseModel):
    """Everything ``bijection-check`` verified for one fiber family."""

    model_config = ConfigDict(frozen=True)

    q: int
    n: int
    kind: str
    pivot: int | None
    fiber_sizes: dict[int, int]  # c index -> |restricted fiber|
    certificates: tuple[CertificateEntry, ...]
    identities: tuple[IdentityEntry, ...]
    maps_available: bool
    passed: bool
