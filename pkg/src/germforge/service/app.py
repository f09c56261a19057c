"""Stateless JSON service over the engine.

One route per operation.  Requests carry complete problem statements
(expressions, components, catalog references), so identical requests yield
identical responses and nothing persists between calls.  Engine failures
surface on three channels and are never silently downgraded: bad input maps
to 400, certification shortfalls to 422/"not_certified", unmet theorem
hypotheses to 422/"hypotheses_unmet".
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..ade import classify_function, modality_of_function
from ..ae_calculus import ae_codim, check_opsu, is_versal
from ..augmentation import analyze_augmentation, augmentation_codim, build_versal
from ..catalog import CatalogEntry, catalog_lookup, core_instance, load_catalog
from ..errors import (
    GermforgeError,
    HypothesesUnmet,
    InvalidInput,
    NotCertifiedByOrder,
    NotStable,
)
from ..germs import MapGerm, Opsu, SubstantialFlag, Unfolding, augment
from ..local_algebra import milnor, quotient_monomial_basis, tjurina
from ..parser import parse_function, parse_polynomial
from ..poly import Polynomial, VarContext, monomial_str
from ..quasihomog import is_r_equiv_quasihomogeneous
from ..simplicity import (
    UNKNOWN,
    generate_table44,
    modality_of_augmentation,
    simplicity_of_augmentation,
)
from . import models as m

CONJECTURE_TABLE44 = (
    "Conjecture: the listed families are believed to exhaust the simple"
    " augmentations in these dimensions; stated as a conjecture, not a verdict."
)
LOWER_BOUND_ONLY = (
    "LowerBoundOnly: the value is certified only as a lower bound; the"
    " augmenting function is not known quasihomogeneous up to coordinate"
    " changes and the unfolding was not asserted substantial."
)


# ----------------------------------------------------------- input parsing


def _function(fin: m.FunctionIn) -> Polynomial:
    if fin.vars is None:
        return parse_function(fin.expr)
    return parse_polynomial(fin.expr, VarContext.of(tuple(fin.vars), "source"))


def _germ(gin: m.GermIn) -> MapGerm:
    ctx = VarContext.of(tuple(gin.vars), "source")
    return MapGerm(ctx, tuple(parse_polynomial(c, ctx) for c in gin.components))


def _unfolding(uin: m.UnfoldingIn) -> Unfolding:
    ctx = VarContext.of(tuple(uin.vars), "source").extend((uin.parameter,), "parameter")
    return Unfolding(ctx, tuple(parse_polynomial(c, ctx) for c in uin.components))


def _core(
    cin: m.CoreIn, jet_order: int | None
) -> tuple[MapGerm, Opsu, CatalogEntry | None]:
    if (cin.catalog is None) == (cin.unfolding is None):
        raise InvalidInput(
            "a core needs exactly one of a catalog name or an explicit unfolding"
        )
    if cin.catalog is not None:
        entry = load_catalog().get(cin.catalog)
        germ, opsu = core_instance(entry, cin.k)
        return germ, opsu, entry
    unfolding = _unfolding(cin.unfolding)
    opsu = check_opsu(unfolding, jet_order)
    return unfolding.base(), opsu, None


# ------------------------------------------------------------ input echoes


def _echo_function(g: Polynomial) -> dict[str, Any]:
    return {"expr": str(g), "vars": list(g.ctx.names)}


def _echo_germ(germ: MapGerm) -> dict[str, Any]:
    return {
        "components": [str(c) for c in germ.components],
        "vars": list(germ.ctx.names),
    }


def _echo_core(cin: m.CoreIn, f: MapGerm, opsu: Opsu) -> dict[str, Any]:
    echo: dict[str, Any] = {"germ": f.display(), "parameter": opsu.parameter}
    if cin.catalog is not None:
        echo["catalog"] = cin.catalog
        if cin.k is not None:
            echo["k"] = cin.k
    else:
        echo["unfolding"] = opsu.unfolding.display()
    return echo


# ------------------------------------------------------------------ errors


def _error_report(exc: GermforgeError) -> tuple[int, m.ErrorReport]:
    if isinstance(exc, NotCertifiedByOrder):
        info = m.ErrorInfo(kind=m.NOT_CERTIFIED, message=str(exc), budget=exc.budget)
        return 422, m.ErrorReport(error=info)
    if isinstance(exc, (HypothesesUnmet, NotStable)):
        lower = exc.lower_bound if isinstance(exc, NotStable) else None
        info = m.ErrorInfo(kind=m.HYPOTHESES_UNMET, message=str(exc), lower_bound=lower)
        return 422, m.ErrorReport(error=info)
    return 400, m.ErrorReport(error=m.ErrorInfo(kind=m.INVALID_INPUT, message=str(exc)))


def _register_errors(app: FastAPI) -> None:
    @app.exception_handler(GermforgeError)
    async def on_engine_error(_: Request, exc: GermforgeError) -> JSONResponse:
        status, report = _error_report(exc)
        return JSONResponse(status_code=status, content=report.model_dump(by_alias=True))

    @app.exception_handler(RequestValidationError)
    async def on_bad_request(_: Request, exc: RequestValidationError) -> JSONResponse:
        parts = (
            ".".join(str(loc) for loc in err["loc"]) + ": " + err["msg"]
            for err in exc.errors()
        )
        report = m.ErrorReport(
            error=m.ErrorInfo(kind=m.INVALID_INPUT, message="; ".join(parts))
        )
        return JSONResponse(status_code=400, content=report.model_dump(by_alias=True))


# ------------------------------------------------------------------ routes


def _register_routes(app: FastAPI) -> None:
    @app.get("/v1/health")
    def health() -> m.Health:
        return m.Health(status="ok", version=__version__)

    @app.post("/v1/mu")
    def mu(req: m.FunctionRequest) -> m.Report[m.CertifiedValue]:
        g = _function(req.function)
        rep = milnor(g, req.jet_order)
        return m.Report[m.CertifiedValue](
            command="mu",
            inputs={"function": _echo_function(g), "jet_order": req.jet_order},
            results=m.CertifiedValue(
                value=rep.dimension, certified_order=rep.certified_order
            ),
        )

    @app.post("/v1/tau")
    def tau(req: m.FunctionRequest) -> m.Report[m.CertifiedValue]:
        g = _function(req.function)
        rep = tjurina(g, req.jet_order)
        return m.Report[m.CertifiedValue](
            command="tau",
            inputs={"function": _echo_function(g), "jet_order": req.jet_order},
            results=m.CertifiedValue(
                value=rep.dimension, certified_order=rep.certified_order
            ),
        )

    @app.post("/v1/qbasis")
    def qbasis(req: m.FunctionRequest) -> m.Report[m.BasisResults]:
        g = _function(req.function)
        rep = quotient_monomial_basis(g, req.jet_order)
        return m.Report[m.BasisResults](
            command="qbasis",
            inputs={"function": _echo_function(g), "jet_order": req.jet_order},
            results=m.BasisResults(
                dimension=rep.dimension,
                basis=[monomial_str(rep.ctx, e) for e in rep.basis],
                certified_order=rep.certified_order,
            ),
        )

    @app.post("/v1/weights")
    def weights(req: m.FunctionRequest) -> m.Report[m.WeightsResults]:
        g = _function(req.function)
        rep = is_r_equiv_quasihomogeneous(g, req.jet_order)
        return m.Report[m.WeightsResults](
            command="weights",
            inputs={"function": _echo_function(g), "jet_order": req.jet_order},
            results=m.WeightsResults(
                quasihomogeneous=rep.quasihomogeneous,
                weights=list(rep.weights.weights) if rep.weights else None,
                degree=rep.weights.degree if rep.weights else None,
                via=rep.via,
                mu=rep.mu,
                tau=rep.tau,
            ),
        )

    @app.post("/v1/classify")
    def classify(req: m.FunctionRequest) -> m.Report[m.ClassifyResults]:
        g = _function(req.function)
        kind = classify_function(g, req.jet_order)
        warnings: list[str] = []
        isolated = kind.tag != "NotIsolated"
        modality = modality_of_function(g, req.jet_order) if isolated else None
        if not isolated:
            warnings.append(
                "NotCertified: the Milnor quotient did not stabilise within the"
                " jet budget; the singularity may be non-isolated."
            )
        elif modality is None:
            warnings.append("Unknown: modality is beyond the stored table.")
        return m.Report[m.ClassifyResults](
            command="classify",
            inputs={"function": _echo_function(g), "jet_order": req.jet_order},
            results=m.ClassifyResults(
                tag=kind.tag,
                index=kind.index,
                label=kind.label(),
                simple=kind.is_simple if isolated else None,
                modality=modality,
                mu=kind.mu,
                tau=tjurina(g, req.jet_order).dimension if isolated else None,
                corank=kind.corank,
                witness=kind.witness,
                certified_order=(
                    milnor(g, req.jet_order).certified_order if isolated else None
                ),
            ),
            warnings=warnings,
        )

    @app.post("/v1/codim")
    def codim(req: m.GermRequest) -> m.Report[m.CodimResults]:
        germ = _germ(req.germ)
        rep = ae_codim(germ, req.jet_order)
        return m.Report[m.CodimResults](
            command="codim",
            inputs={"germ": _echo_germ(germ), "jet_order": req.jet_order},
            results=m.CodimResults(
                codim=rep.codim, certified_order=rep.certified_order
            ),
        )

    @app.post("/v1/nbasis")
    def nbasis(req: m.GermRequest) -> m.Report[m.NormalBasisResults]:
        germ = _germ(req.germ)
        rep = ae_codim(germ, req.jet_order)
        return m.Report[m.NormalBasisResults](
            command="nbasis",
            inputs={"germ": _echo_germ(germ), "jet_order": req.jet_order},
            results=m.NormalBasisResults(
                codim=rep.codim,
                basis=[[str(p) for p in field] for field in rep.normal_fields()],
                certified_order=rep.certified_order,
            ),
        )

    @app.post("/v1/augment")
    def augment_germ(req: m.AugmentRequest) -> m.Report[m.AugmentResults]:
        f, opsu, _ = _core(req.core, req.jet_order)
        g = _function(req.g)
        result = augment(f, opsu, g)
        return m.Report[m.AugmentResults](
            command="augment",
            inputs={
                "core": _echo_core(req.core, f, opsu),
                "g": _echo_function(g),
                "jet_order": req.jet_order,
            },
            results=m.AugmentResults(
                components=[str(c) for c in result.components],
                vars=list(result.ctx.names),
                display=result.display(),
                core=f.display(),
                parameter=opsu.parameter,
            ),
        )

    @app.post("/v1/acodim")
    def acodim(req: m.AcodimRequest) -> m.Report[m.AcodimResults]:
        g = _function(req.g)
        if (req.f_codim is None) == (req.core is None):
            raise InvalidInput("give exactly one of f_codim or core")
        inputs: dict[str, Any] = {
            "g": _echo_function(g),
            "substantial": req.substantial,
            "jet_order": req.jet_order,
        }
        if req.core is not None:
            f, opsu, _ = _core(req.core, req.jet_order)
            f_codim = ae_codim(f, req.jet_order).codim
            inputs["core"] = _echo_core(req.core, f, opsu)
        else:
            f_codim = req.f_codim
            inputs["f_codim"] = f_codim
        rep = augmentation_codim(
            f_codim, g, SubstantialFlag(req.substantial), req.jet_order
        )
        if req.require_exact and not rep.exact:
            raise HypothesesUnmet(
                "only a lower bound is certified: the augmenting function is not"
                " known quasihomogeneous up to coordinate changes and the"
                " unfolding was not asserted substantial"
            )
        return m.Report[m.AcodimResults](
            command="acodim",
            inputs=inputs,
            results=m.AcodimResults(
                value=rep.value,
                exact=rep.exact,
                via=rep.via,
                f_codim=rep.f_codim,
                tau=rep.tau,
                tau_certified_order=tjurina(g, req.jet_order).certified_order,
            ),
            warnings=[] if rep.exact else [LOWER_BOUND_ONLY],
        )

    @app.post("/v1/versal")
    def versal(req: m.VersalRequest) -> m.Report[m.VersalResults]:
        f, opsu, _ = _core(req.core, req.jet_order)
        g = _function(req.g)
        aug = analyze_augmentation(
            f, opsu, g, SubstantialFlag(req.substantial), req.jet_order
        )
        unfolding = build_versal(aug)
        # Same decision as verify_versal, inlined to surface the certifying
        # order; the base germ matches by construction.
        rep = is_versal(unfolding, req.jet_order)
        verified = rep.versal and unfolding.m == aug.codim_report.value
        return m.Report[m.VersalResults](
            command="versal",
            inputs={
                "core": _echo_core(req.core, f, opsu),
                "g": _echo_function(g),
                "substantial": req.substantial,
                "jet_order": req.jet_order,
            },
            results=m.VersalResults(
                augmentation=aug.result.display(),
                components=[str(c) for c in unfolding.components],
                vars=list(unfolding.ctx.names),
                parameters=list(unfolding.parameter_names),
                parameter_count=unfolding.m,
                expected_parameters=aug.codim_report.value,
                verified=verified,
                codim=rep.codim,
                covered=rep.covered,
                certified_order=rep.certified_order,
            ),
        )

    @app.post("/v1/simple")
    def simple(req: m.SimpleRequest) -> m.Report[m.SimplicityResults]:
        g = _function(req.g)
        if (req.f_codim is None) == (req.core is None):
            raise InvalidInput("give exactly one of f_codim or core")
        f_simple = req.f_simple
        result_germ = None
        inputs: dict[str, Any] = {"g": _echo_function(g), "jet_order": req.jet_order}
        if req.core is not None:
            f, opsu, entry = _core(req.core, req.jet_order)
            f_codim = ae_codim(f, req.jet_order).codim
            if f_simple is None and entry is not None:
                f_simple = entry.simple
            result_germ = augment(f, opsu, g)
            inputs["core"] = _echo_core(req.core, f, opsu)
        else:
            f_codim = req.f_codim
            inputs["f_codim"] = f_codim
        inputs["f_simple"] = f_simple
        verdict = simplicity_of_augmentation(
            f_codim, f_simple, g, result_germ, req.jet_order
        )
        warnings = []
        if verdict.status == UNKNOWN:
            warnings.append(
                "Unknown: the decision rules and the catalog do not settle this case."
            )
        return m.Report[m.SimplicityResults](
            command="simple",
            inputs=inputs,
            results=m.SimplicityResults(
                status=verdict.status, justification=verdict.justification
            ),
            warnings=warnings,
        )

    @app.post("/v1/modality")
    def modality(req: m.ModalityRequest) -> m.Report[m.ModalityResults]:
        g = _function(req.g)
        value = modality_of_augmentation(
            req.f_codim, g, req.mu_constant_qh, req.jet_order
        )
        warnings: list[str] = []
        via = None
        if value is None:
            if req.f_codim != 1 or not req.mu_constant_qh:
                warnings.append(
                    "Unknown: the transfer rule needs a codimension-1 core and"
                    " the asserted mu-constant quasihomogeneity of deformations."
                )
            else:
                warnings.append(
                    "Unknown: the modality of the augmenting function is beyond"
                    " the stored table."
                )
        else:
            via = "transfer from the augmenting function"
        return m.Report[m.ModalityResults](
            command="modality",
            inputs={
                "g": _echo_function(g),
                "f_codim": req.f_codim,
                "mu_constant_qh": req.mu_constant_qh,
                "jet_order": req.jet_order,
            },
            results=m.ModalityResults(modality=value, via=via),
            warnings=warnings,
        )

    @app.post("/v1/table44")
    def table44(req: m.TableRequest) -> m.Report[m.TableResults]:
        families = []
        for entry in generate_table44(req.jet_order):
            instances = [
                m.TableInstanceOut(
                    label=inst.label,
                    display=inst.display_form,
                    codim=inst.codim,
                    exact=inst.exact,
                    status=inst.verdict.status,
                    justification=inst.verdict.justification,
                )
                for inst in entry.instances
            ]
            families.append(
                m.TableFamilyOut(
                    tag=entry.tag,
                    dims=list(entry.dims),
                    normal_form=entry.normal_form,
                    codim_formula=entry.codim_formula,
                    constraint=entry.constraint,
                    instances=instances,
                )
            )
        return m.Report[m.TableResults](
            command="table44",
            inputs={"jet_order": req.jet_order},
            results=m.TableResults(families=families),
            warnings=[CONJECTURE_TABLE44],
        )

    @app.get("/v1/catalog")
    def catalog_list() -> m.Report[m.CatalogListResults]:
        entries = [
            m.CatalogEntryOut(
                name=e.name,
                aliases=list(e.aliases),
                dims=list(e.dims),
                normal_form=e.normal_form(),
                codim=e.codim_formula,
                simple=e.simple,
                constraint=e.constraint,
                source=e.source,
            )
            for e in load_catalog().entries
        ]
        return m.Report[m.CatalogListResults](
            command="catalog-list",
            inputs={},
            results=m.CatalogListResults(count=len(entries), entries=entries),
        )

    @app.post("/v1/catalog/lookup")
    def catalog_find(req: m.LookupRequest) -> m.Report[m.LookupResults]:
        germ = _germ(req.germ)
        match = catalog_lookup(germ)
        if match is None:
            results = m.LookupResults(matched=False)
            warnings = ["Unknown: no catalog entry matches this germ."]
        else:
            results = m.LookupResults(
                matched=True,
                name=match.entry.name,
                label=match.label,
                k=match.k,
                codim=match.codim,
                simple=match.simple,
            )
            warnings = []
        return m.Report[m.LookupResults](
            command="catalog-lookup",
            inputs={"germ": _echo_germ(germ)},
            results=results,
            warnings=warnings,
        )


def create_app() -> FastAPI:
    """The service application; stateless, safe to instantiate per process."""
    app = FastAPI(
        title="germforge",
        version=__version__,
        description=(
            "Exact jet-level invariants of map-germs and their augmentations."
        ),
    )
    _register_errors(app)
    _register_routes(app)
    return app
