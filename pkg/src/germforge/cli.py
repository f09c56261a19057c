"""Command-line front end.

A thin client over the JSON service: every subcommand builds one request,
sends it to an in-process application (or a running one via ``--server``)
and renders the response as text or as the raw JSON report.

Exit codes: 0 success, 1 usage or invalid input, 2 certification shortfall
within the jet budget, 3 unmet theorem hypotheses (including a lower-bound
answer when an exact one was demanded).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import re
import sys
from typing import Any, NoReturn, Sequence

import httpx

from .errors import GermforgeError, InvalidInput
from .germfile import GermFile, load_germ_file
from .service import models

_REMOTE_TIMEOUT = 600.0


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for
    certification shortfalls, so usage errors are remapped to 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


# --------------------------------------------------------- parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="germforge",
        description="Exact invariants of map-germs and their augmentations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit the JSON report instead of text"
    )
    common.add_argument(
        "--jet-order",
        type=int,
        metavar="N",
        help="jet budget override (environment: GERMFORGE_JET_BUDGET)",
    )
    common.add_argument(
        "--germ-file", metavar="PATH", help="definition file for named references"
    )
    common.add_argument(
        "--server",
        metavar="URL",
        help="send the request to a running service instead of in-process",
    )
    sub = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser, metavar="COMMAND"
    )

    def function_command(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("-e", "--expr", metavar="EXPR", help="function expression")
        p.add_argument(
            "--vars",
            metavar="NAMES",
            help="variables for --expr (default: those used, alphabetically)",
        )
        p.add_argument("--name", metavar="NAME", help="function from the germ file")
        return p

    function_command("mu", "Milnor number of a function germ")
    function_command("tau", "Tjurina number of a function germ")
    function_command("qbasis", "monomial basis of the Tjurina quotient")
    function_command("weights", "quasihomogeneity up to coordinate changes")
    function_command("classify", "place a function germ in the A/D/E hierarchy")

    def germ_arguments(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--components", metavar="EXPRS", help="semicolon-separated components"
        )
        p.add_argument("--vars", metavar="NAMES", help="variables for --components")
        p.add_argument("--germ", metavar="NAME", help="map-germ from the germ file")

    p = sub.add_parser("codim", parents=[common], help="extended codimension of a map-germ")
    germ_arguments(p)
    p = sub.add_parser("nbasis", parents=[common], help="normal space basis of a map-germ")
    germ_arguments(p)

    def core_arguments(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--core",
            metavar="NAME",
            help="catalog entry with a stored one-parameter family",
        )
        p.add_argument("-k", type=int, metavar="K", help="series index for --core")
        p.add_argument(
            "--unfolding",
            metavar="NAME",
            help="one-parameter unfolding from the germ file",
        )

    def augmenting_arguments(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "-g", "--augmenting", metavar="EXPR", help="augmenting function expression"
        )
        p.add_argument("--g-vars", metavar="NAMES", help="variables for -g")
        p.add_argument(
            "--g-name", metavar="NAME", help="augmenting function from the germ file"
        )

    p = sub.add_parser("augment", parents=[common], help="augment a core germ by a function")
    core_arguments(p)
    augmenting_arguments(p)

    p = sub.add_parser("acodim", parents=[common], help="codimension of an augmentation")
    core_arguments(p)
    augmenting_arguments(p)
    p.add_argument(
        "--f-codim",
        type=int,
        metavar="N",
        help="known core codimension, instead of a core",
    )
    p.add_argument(
        "--substantial", action="store_true", help="assert the unfolding is substantial"
    )
    p.add_argument(
        "--exact",
        action="store_true",
        help="fail (exit 3) instead of reporting a lower bound",
    )

    p = sub.add_parser("versal", parents=[common], help="build and verify a versal unfolding")
    core_arguments(p)
    augmenting_arguments(p)
    p.add_argument(
        "--substantial", action="store_true", help="assert the unfolding is substantial"
    )

    p = sub.add_parser("simple", parents=[common], help="simplicity of an augmentation")
    core_arguments(p)
    augmenting_arguments(p)
    p.add_argument(
        "--f-codim",
        type=int,
        metavar="N",
        help="known core codimension, instead of a core",
    )
    p.add_argument(
        "--f-simple",
        choices=("yes", "no", "unknown"),
        default="unknown",
        help="known simplicity of the core germ",
    )

    p = sub.add_parser("modality", parents=[common], help="modality of an augmentation")
    augmenting_arguments(p)
    p.add_argument("--f-codim", type=int, required=True, metavar="N")
    p.add_argument(
        "--mu-constant-qh",
        action="store_true",
        help="assert equal-Milnor deformations of g remain quasihomogeneous",
    )

    sub.add_parser(
        "table44", parents=[common], help="regenerate the simple-augmentation table"
    )

    p = sub.add_parser("catalog", parents=[common], help="list or match stored normal forms")
    p.add_argument("action", choices=("list", "lookup"))
    germ_arguments(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


# -------------------------------------------------------- request building


def _split_names(text: str) -> list[str]:
    return [name for name in text.replace(",", " ").split() if name]


def _definitions(args: argparse.Namespace) -> GermFile:
    if args.germ_file is None:
        raise InvalidInput("a named definition needs --germ-file")
    return load_germ_file(args.germ_file)


def _function_payload(args: argparse.Namespace) -> dict[str, Any]:
    if (args.expr is None) == (args.name is None):
        raise InvalidInput("give exactly one of --expr or --name")
    if args.expr is not None:
        payload: dict[str, Any] = {"expr": args.expr}
        if args.vars:
            payload["vars"] = _split_names(args.vars)
        return payload
    fn = _definitions(args).function(args.name)
    return {"expr": str(fn), "vars": list(fn.ctx.names)}


def _augmenting_payload(args: argparse.Namespace) -> dict[str, Any]:
    if (args.augmenting is None) == (args.g_name is None):
        raise InvalidInput("give exactly one of -g or --g-name")
    if args.augmenting is not None:
        payload: dict[str, Any] = {"expr": args.augmenting}
        if args.g_vars:
            payload["vars"] = _split_names(args.g_vars)
        return payload
    fn = _definitions(args).function(args.g_name)
    return {"expr": str(fn), "vars": list(fn.ctx.names)}


def _germ_payload(args: argparse.Namespace) -> dict[str, Any]:
    if (args.components is None) == (args.germ is None):
        raise InvalidInput("give exactly one of --components or --germ")
    if args.components is not None:
        if not args.vars:
            raise InvalidInput("--components needs --vars")
        return {
            "components": [c.strip() for c in args.components.split(";")],
            "vars": _split_names(args.vars),
        }
    germ = _definitions(args).germ(args.germ)
    return {
        "components": [str(c) for c in germ.components],
        "vars": list(germ.ctx.names),
    }


def _core_payload(args: argparse.Namespace) -> dict[str, Any]:
    if (args.core is None) == (args.unfolding is None):
        raise InvalidInput("give exactly one of --core or --unfolding")
    if args.core is not None:
        payload: dict[str, Any] = {"catalog": args.core}
        if args.k is not None:
            payload["k"] = args.k
        return payload
    unfolding = _definitions(args).unfolding(args.unfolding)
    if unfolding.m != 1:
        raise InvalidInput("the core unfolding must have exactly one parameter")
    return {
        "unfolding": {
            "components": [str(c) for c in unfolding.components],
            "vars": [n for n in unfolding.ctx.names if n not in unfolding.parameter_names],
            "parameter": unfolding.parameter_names[0],
        }
    }


def _core_or_codim(args: argparse.Namespace, payload: dict[str, Any]) -> None:
    has_core = args.core is not None or args.unfolding is not None
    if args.f_codim is not None:
        if has_core:
            raise InvalidInput("give either --f-codim or a core, not both")
        payload["f_codim"] = args.f_codim
        return
    if not has_core:
        raise InvalidInput("give --f-codim or a core (--core / --unfolding)")
    payload["core"] = _core_payload(args)


def _build_request(args: argparse.Namespace) -> tuple[str, str, dict[str, Any] | None]:
    command = args.command
    jet = args.jet_order
    if command in ("mu", "tau", "qbasis", "weights", "classify"):
        payload = {"function": _function_payload(args), "jet_order": jet}
        return "POST", f"/v1/{command}", payload
    if command in ("codim", "nbasis"):
        return "POST", f"/v1/{command}", {"germ": _germ_payload(args), "jet_order": jet}
    if command == "augment":
        payload = {
            "core": _core_payload(args),
            "g": _augmenting_payload(args),
            "jet_order": jet,
        }
        return "POST", "/v1/augment", payload
    if command == "acodim":
        payload = {
            "g": _augmenting_payload(args),
            "substantial": args.substantial,
            "require_exact": args.exact,
            "jet_order": jet,
        }
        _core_or_codim(args, payload)
        return "POST", "/v1/acodim", payload
    if command == "versal":
        payload = {
            "core": _core_payload(args),
            "g": _augmenting_payload(args),
            "substantial": args.substantial,
            "jet_order": jet,
        }
        return "POST", "/v1/versal", payload
    if command == "simple":
        payload = {"g": _augmenting_payload(args), "jet_order": jet}
        _core_or_codim(args, payload)
        if args.f_simple != "unknown":
            payload["f_simple"] = args.f_simple == "yes"
        return "POST", "/v1/simple", payload
    if command == "modality":
        payload = {
            "g": _augmenting_payload(args),
            "f_codim": args.f_codim,
            "mu_constant_qh": args.mu_constant_qh,
            "jet_order": jet,
        }
        return "POST", "/v1/modality", payload
    if command == "table44":
        return "POST", "/v1/table44", {"jet_order": jet}
    if args.action == "list":
        return "GET", "/v1/catalog", None
    return "POST", "/v1/catalog/lookup", {"germ": _germ_payload(args)}


# ---------------------------------------------------------------- transport


def _send(
    server: str | None, method: str, path: str, payload: dict[str, Any] | None
) -> tuple[int, dict[str, Any]]:
    if server is not None:
        with httpx.Client(base_url=server, timeout=_REMOTE_TIMEOUT) as client:
            response = client.request(method, path, json=payload)
            return response.status_code, response.json()
    return asyncio.run(_send_in_process(method, path, payload))


async def _send_in_process(
    method: str, path: str, payload: dict[str, Any] | None
) -> tuple[int, dict[str, Any]]:
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://germforge", timeout=None
    ) as client:
        response = await client.request(method, path, json=payload)
        return response.status_code, response.json()


def _exit_code(status: int, body: dict[str, Any]) -> int:
    if status == 200:
        return 0
    kind = body.get("error", {}).get("kind", "")
    if kind == models.NOT_CERTIFIED:
        return 2
    if kind == models.HYPOTHESES_UNMET:
        return 3
    return 1


# ---------------------------------------------------------------- rendering


def _pretty_justification(token: str) -> str:
    match = re.fullmatch(r"Theorem(\d)(\d)", token)
    if match:
        return f"Theorem {match.group(1)}.{match.group(2)}"
    return token


def _yes_no(flag: bool | None) -> str:
    if flag is None:
        return "unknown"
    return "yes" if flag else "no"


def _render_value(name: str) -> Any:
    def render(r: dict[str, Any]) -> list[str]:
        return [f"{name} = {r['value']}    [jet order {r['certified_order']}]"]

    return render


def _render_qbasis(r: dict[str, Any]) -> list[str]:
    return [
        f"dimension = {r['dimension']}    [jet order {r['certified_order']}]",
        "basis: " + ", ".join(r["basis"]),
    ]


def _render_weights(r: dict[str, Any]) -> list[str]:
    lines = [f"quasihomogeneous: {_yes_no(r['quasihomogeneous'])}    [via {r['via']}]"]
    if r["weights"] is not None:
        weights = ", ".join(str(w) for w in r["weights"])
        lines.append(f"weights: ({weights}) with weighted degree {r['degree']}")
    if r["mu"] is not None:
        lines.append(f"mu = {r['mu']}, tau = {r['tau']}")
    return lines


def _render_classify(r: dict[str, Any]) -> list[str]:
    lines = [f"type: {r['label']}"]
    facts = []
    for key in ("mu", "tau", "corank"):
        if r[key] is not None:
            facts.append(f"{key} = {r[key]}")
    if facts:
        lines.append(", ".join(facts))
    if r["simple"] is not None:
        lines.append(f"simple: {_yes_no(r['simple'])}")
    if r["modality"] is not None:
        lines.append(f"modality: {r['modality']}")
    if r["certified_order"] is not None:
        lines.append(f"[jet order {r['certified_order']}]")
    return lines


def _render_codim(r: dict[str, Any]) -> list[str]:
    return [f"ae-codimension = {r['codim']}    [jet order {r['certified_order']}]"]


def _render_nbasis(r: dict[str, Any]) -> list[str]:
    lines = _render_codim({"codim": r["codim"], "certified_order": r["certified_order"]})
    lines.append("normal space basis:")
    lines.extend("    (" + ", ".join(field) + ")" for field in r["basis"])
    return lines


def _render_augment(r: dict[str, Any]) -> list[str]:
    return [
        f"augmentation: {r['display']}",
        f"core: {r['core']}    [unfolding parameter {r['parameter']}]",
    ]


def _render_acodim(r: dict[str, Any]) -> list[str]:
    quality = "exact" if r["exact"] else "lower bound"
    return [
        f"augmentation codimension = {r['value']}    ({quality}, via {r['via']})",
        f"core codimension {r['f_codim']} x tau {r['tau']}"
        f"    [tau certified at jet order {r['tau_certified_order']}]",
    ]


def _render_versal(r: dict[str, Any]) -> list[str]:
    return [
        f"augmentation: {r['augmentation']}",
        "versal unfolding: (" + ", ".join(r["components"]) + ")",
        f"parameters: {', '.join(r['parameters'])}"
        f"    [{r['parameter_count']} of {r['expected_parameters']} expected]",
        f"versal: {_yes_no(r['verified'])} (covers {r['covered']} of {r['codim']})"
        f"    [jet order {r['certified_order']}]",
    ]


def _render_simple(r: dict[str, Any]) -> list[str]:
    line = r["status"]
    if r["justification"]:
        line += f", justification {_pretty_justification(r['justification'])}"
    return [line]


def _render_modality(r: dict[str, Any]) -> list[str]:
    if r["modality"] is None:
        return ["modality: unknown"]
    return [f"modality = {r['modality']}    [{r['via']}]"]


def _render_table(r: dict[str, Any]) -> list[str]:
    lines = []
    for family in r["families"]:
        n, p = family["dims"]
        header = (
            f"{family['tag']}  ({n},{p})  {family['normal_form']}"
            f"  codim {family['codim_formula']}"
        )
        if family["constraint"]:
            header += f"  [{family['constraint']}]"
        lines.append(header)
        for inst in family["instances"]:
            exact = "" if inst["exact"] else " (lower bound)"
            tail = f", {inst['status']}"
            if inst["justification"]:
                tail += f" [{_pretty_justification(inst['justification'])}]"
            lines.append(f"    {inst['label']}: codim {inst['codim']}{exact}{tail}")
    return lines


def _render_catalog_list(r: dict[str, Any]) -> list[str]:
    lines = [f"{r['count']} entries"]
    for e in r["entries"]:
        n, p = e["dims"]
        simple = {True: "simple", False: "non-simple", None: "-"}[e["simple"]]
        lines.append(
            f"  {e['name']:<16} ({n},{p})  codim {e['codim']:<9} {simple:<11}"
            f" {e['normal_form']}"
        )
    return lines


def _render_lookup(r: dict[str, Any]) -> list[str]:
    if not r["matched"]:
        return ["no catalog match"]
    return [
        f"matched: {r['label']}    [entry {r['name']},"
        f" codim {r['codim']}, simple: {_yes_no(r['simple'])}]"
    ]


_RENDERERS = {
    "mu": _render_value("mu"),
    "tau": _render_value("tau"),
    "qbasis": _render_qbasis,
    "weights": _render_weights,
    "classify": _render_classify,
    "codim": _render_codim,
    "nbasis": _render_nbasis,
    "augment": _render_augment,
    "acodim": _render_acodim,
    "versal": _render_versal,
    "simple": _render_simple,
    "modality": _render_modality,
    "table44": _render_table,
    "catalog-list": _render_catalog_list,
    "catalog-lookup": _render_lookup,
}


def _render(body: dict[str, Any]) -> None:
    for line in _RENDERERS[body["command"]](body["results"]):
        print(line)
    for warning in body.get("warnings", ()):
        print(f"warning: {warning}")


def _render_error(body: dict[str, Any]) -> None:
    error = body.get("error", {})
    line = f"error ({error.get('kind', 'unknown')}): {error.get('message', '')}"
    print(line, file=sys.stderr)


# --------------------------------------------------------------- dispatch


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _serve(args)
    try:
        method, path, payload = _build_request(args)
    except GermforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        status, body = _send(args.server, method, path, payload)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach the service: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(body, sort_keys=True, separators=(",", ":")))
    elif status == 200:
        _render(body)
    else:
        _render_error(body)
    return _exit_code(status, body)


if __name__ == "__main__":
    raise SystemExit(main())
