"""Wire format of the JSON service.

Every successful response shares one envelope (:class:`Report`): a schema
version tag, the operation name, an echo of the inputs as the engine parsed
them, an operation-specific results payload, and warning strings for honest
qualifications (lower bounds, unknowns, labeled conjectures).  Failures
share :class:`ErrorReport`, discriminated by ``kind``.
"""

from __future__ import annotations

from typing import Any, Generic, TypeVar

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

INVALID_INPUT = "invalid_input"
NOT_CERTIFIED = "not_certified"
HYPOTHESES_UNMET = "hypotheses_unmet"


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


# ------------------------------------------------------------------ inputs


class FunctionIn(_Model):
    """A function germ; variables default to those used, alphabetically."""

    expr: str
    vars: list[str] | None = None


class GermIn(_Model):
    """A map-germ, one expression per component, over ordered variables."""

    components: list[str]
    vars: list[str]


class UnfoldingIn(_Model):
    """A one-parameter unfolding given explicitly.

    ``vars`` are the source variables; the parameter is appended after
    them.  ``components`` list every component, the parameter itself last.
    """

    components: list[str]
    vars: list[str]
    parameter: str


class CoreIn(_Model):
    """A core germ together with a stable one-parameter unfolding.

    Exactly one of ``catalog`` (an entry name or alias, with ``k`` for the
    series entries) or ``unfolding``; explicit unfoldings are certified
    stable before use.
    """

    catalog: str | None = None
    k: int | None = None
    unfolding: UnfoldingIn | None = None


class FunctionRequest(_Model):
    function: FunctionIn
    jet_order: int | None = None


class GermRequest(_Model):
    germ: GermIn
    jet_order: int | None = None


class AugmentRequest(_Model):
    core: CoreIn
    g: FunctionIn
    jet_order: int | None = None


class AcodimRequest(_Model):
    """Codimension of an augmentation.

    The core is given either as a certified construction (``core``) or as a
    bare ``f_codim`` the caller vouches for.  ``require_exact`` turns a
    lower-bound-only answer into an unmet-hypotheses failure instead of a
    marked value.
    """

    g: FunctionIn
    f_codim: int | None = None
    core: CoreIn | None = None
    substantial: bool = False
    require_exact: bool = False
    jet_order: int | None = None


class VersalRequest(_Model):
    core: CoreIn
    g: FunctionIn
    substantial: bool = False
    jet_order: int | None = None


class SimpleRequest(_Model):
    """Simplicity of an augmentation.

    Either name a core (its codimension is then computed and, for catalog
    entries, its stored simplicity used) or pass ``f_codim``/``f_simple``
    directly; ``f_simple`` None means unknown.
    """

    g: FunctionIn
    f_codim: int | None = None
    f_simple: bool | None = None
    core: CoreIn | None = None
    jet_order: int | None = None


class ModalityRequest(_Model):
    g: FunctionIn
    f_codim: int
    mu_constant_qh: bool = False
    jet_order: int | None = None


class TableRequest(_Model):
    jet_order: int | None = None


class LookupRequest(_Model):
    germ: GermIn


# ----------------------------------------------------------------- results


class CertifiedValue(_Model):
    """An integer with the jet order that certified it."""

    value: int
    certified_order: int


class BasisResults(_Model):
    dimension: int
    basis: list[str]
    certified_order: int


class WeightsResults(_Model):
    quasihomogeneous: bool
    weights: list[int] | None
    degree: int | None
    via: str
    mu: int | None
    tau: int | None


class ClassifyResults(_Model):
    tag: str
    index: int | None
    label: str
    simple: bool | None
    modality: int | None
    mu: int | None
    tau: int | None
    corank: int | None
    witness: str | None
    certified_order: int | None


class CodimResults(_Model):
    codim: int
    certified_order: int


class NormalBasisResults(_Model):
    """Vector fields spanning the normal space, one component string per
    target coordinate."""

    codim: int
    basis: list[list[str]]
    certified_order: int


class AugmentResults(_Model):
    components: list[str]
    vars: list[str]
    display: str
    core: str
    parameter: str


class AcodimResults(_Model):
    value: int
    exact: bool
    via: str
    f_codim: int
    tau: int
    tau_certified_order: int


class VersalResults(_Model):
    """A constructed unfolding with its verification.

    ``codim``/``covered`` come from the independent jet criterion on the
    augmentation itself; ``verified`` also requires the parameter count to
    equal the codimension product ``expected_parameters``.
    """

    augmentation: str
    components: list[str]
    vars: list[str]
    parameters: list[str]
    parameter_count: int
    expected_parameters: int
    verified: bool
    codim: int
    covered: int
    certified_order: int


class SimplicityResults(_Model):
    status: str
    justification: str | None


class ModalityResults(_Model):
    modality: int | None
    via: str | None


class TableInstanceOut(_Model):
    label: str
    display: str
    codim: int
    exact: bool
    status: str
    justification: str | None


class TableFamilyOut(_Model):
    tag: str
    dims: list[int]
    normal_form: str
    codim_formula: str
    constraint: str
    instances: list[TableInstanceOut]


class TableResults(_Model):
    families: list[TableFamilyOut]


class CatalogEntryOut(_Model):
    name: str
    aliases: list[str]
    dims: list[int]
    normal_form: str
    codim: str
    simple: bool | None
    constraint: str
    source: str


class CatalogListResults(_Model):
    count: int
    entries: list[CatalogEntryOut]


class LookupResults(_Model):
    matched: bool
    name: str | None = None
    label: str | None = None
    k: int | None = None
    codim: int | None = None
    simple: bool | None = None


# --------------------------------------------------------------- envelopes


ResultsT = TypeVar("ResultsT", bound=BaseModel)


class Report(_Model, Generic[ResultsT]):
    """Envelope of every successful response."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: str
    inputs: dict[str, Any]
    results: ResultsT
    warnings: list[str] = Field(default_factory=list)


class ErrorInfo(_Model):
    kind: str
    message: str
    budget: int | None = None
    lower_bound: int | None = None


class ErrorReport(_Model):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    error: ErrorInfo


class Health(_Model):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    status: str
    version: str
