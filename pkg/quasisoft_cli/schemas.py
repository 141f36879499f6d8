"""Pydantic data models for quasisoft-cli"""

from typing import Literal

from pydantic import BaseModel, Field


class LatinDefect(BaseModel):
    """A repeated symbol in one row or column of a Cayley table"""

    axis: Literal["row", "column"] = Field(..., description="Line kind")
    index: str = Field(..., description="Symbol labelling the row or column")
    symbol: str = Field(..., description="Symbol occurring more than once")
    positions: list[str] = Field(..., description="Symbols of the cells holding the repeat")
    missing: list[str] = Field(default_factory=list, description="Symbols absent from the line")

    def describe(self) -> str:
        return (
            f"{self.axis} {self.index}: symbol {self.symbol} repeated at "
            f"{', '.join(self.positions)}; missing {' '.join(self.missing) or '-'}"
        )


class PropertyReport(BaseModel):
    """Structural predicates of a finite quasigroup"""

    is_loop: bool
    identity: int | None = Field(None, description="Two-sided identity index, if any")
    is_group: bool
    is_commutative: bool
    is_idempotent: bool
    is_flexible: bool
    is_left_distributive: bool
    is_right_distributive: bool

    @property
    def is_distributive(self) -> bool:
        return self.is_left_distributive and self.is_right_distributive


class DistributiveIdentities(BaseModel):
    """Consequences of distributivity checked cell by cell"""

    translations_are_automorphisms: bool
    left_mul_over_ldiv: bool = Field(..., description="x(y\\z) = (xy)\\(xz)")
    right_mul_over_rdiv: bool = Field(..., description="(y/z)x = (yx)/(zx)")
    ldiv_over_mul: bool = Field(..., description="x\\(yz) = (x\\y)(x\\z)")
    rdiv_over_mul: bool = Field(..., description="(yz)/x = (y/x)(z/x)")

    @property
    def all_hold(self) -> bool:
        return all(self.model_dump().values())


class GroupCriterion(BaseModel):
    """Four equivalent views of a subset of a group"""

    is_subloop: bool
    is_subgroup: bool
    rdiv_closed: bool
    ldiv_closed: bool

    @property
    def agree(self) -> bool:
        return len(set(self.model_dump().values())) == 1


class SoftGroupCriterion(BaseModel):
    """Four equivalent views of a soft set over a group"""

    soft_group: bool
    soft_loop: bool
    rdiv_soft_groupoid: bool
    ldiv_soft_groupoid: bool

    @property
    def agree(self) -> bool:
        return len(set(self.model_dump().values())) == 1


class ParameterClass(BaseModel):
    """Per-parameter classification of a soft value"""

    parameter: str
    groupoid: bool
    quasigroup: bool
    loop: bool
    group: bool


class ParastropheLaws(BaseModel):
    """Laws of one parastrophe of a soft quasigroup's base"""

    kind: str
    soft_quasigroup: bool
    distributive: bool
    idempotent: bool
    flexible: bool


class DistributiveSoftReport(BaseModel):
    """Distributivity of a soft quasigroup and its corollaries"""

    distributive: bool
    corollaries: list[ParastropheLaws] = Field(default_factory=list)

    @property
    def corollaries_hold(self) -> bool:
        return all(
            c.soft_quasigroup and c.distributive and c.idempotent and c.flexible
            for c in self.corollaries
        )


class NuclearReport(BaseModel):
    """Whether some soft value coincides with a nucleus"""

    is_left_nuclear: bool
    is_right_nuclear: bool


class Counterexample(BaseModel):
    """A concrete witness that a checked property failed"""

    battery: str = Field(..., description="Battery or check that failed")
    message: str
    witness: dict[str, str] = Field(default_factory=dict)


class Entry(BaseModel):
    key: str
    value: str


class Section(BaseModel):
    """A titled block of key-value lines"""

    title: str
    entries: list[Entry] = Field(default_factory=list)

    def add(self, key: str, value: object) -> "Section":
        self.entries.append(Entry(key=key, value=_render(value)))
        return self


class CayleyBlock(BaseModel):
    """An operation table rendered with display symbols"""

    title: str
    header: list[str]
    rows: list[list[str]]


class Report(BaseModel):
    """Deterministic command report"""

    status: Literal["pass", "fail", "invalid-input"] = "pass"
    sections: list[Section] = Field(default_factory=list)
    tables: list[CayleyBlock] = Field(default_factory=list)
    counterexamples: list[Counterexample] = Field(default_factory=list)

    def section(self, title: str) -> Section:
        block = Section(title=title)
        self.sections.append(block)
        return block

    def fail(self, battery: str, message: str, **witness: object) -> None:
        self.counterexamples.append(
            Counterexample(
                battery=battery,
                message=message,
                witness={k: _render(v) for k, v in witness.items()},
            )
        )
        if self.status == "pass":
            self.status = "fail"

    def absorb(self, other: "Report") -> None:
        """Append another report's sections, tables and findings."""
        self.sections.extend(other.sections)
        self.tables.extend(other.tables)
        for finding in other.counterexamples:
            self.counterexamples.append(finding)
            if self.status == "pass":
                self.status = "fail"


def _render(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
