"""Thin command-line client for the localization service.

Every subcommand posts to the HTTP API.  By default the bundled app is
driven in-process over an ASGI transport, so no server is needed; pass
--server to talk to a running instance instead.  Output is deterministic:
identical invocations produce byte-identical text.
"""

from __future__ import annotations

import asyncio
import json
from pathlib import Path

import click
import httpx

from . import __version__

_LOCAL_BASE_URL = "http://spinloc.internal"


def _format_error(body: object) -> str:
    detail = body.get("detail") if isinstance(body, dict) else body
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list):
        # pydantic validation errors: [{loc: [...], msg: ...}, ...]
        parts = []
        for err in detail:
            loc = ".".join(str(x) for x in err.get("loc", []) if x != "body")
            msg = err.get("msg", "invalid value")
            parts.append(f"{loc}: {msg}" if loc else msg)
        return "; ".join(parts)
    return str(detail)


class ServiceClient:
    """Posts requests to a remote service, or to the bundled app in-process
    when no server URL is configured."""

    def __init__(self, server: str | None = None):
        self.server = server

    def post(self, path: str, payload: dict) -> dict:
        try:
            status, body = asyncio.run(self._request(path, payload))
        except httpx.HTTPError as exc:
            raise click.ClickException(f"cannot reach service at {self.server}: {exc}")
        if status != 200:
            raise click.ClickException(_format_error(body))
        return body

    async def _request(self, path: str, payload: dict) -> tuple[int, object]:
        if self.server is None:
            from .service.app import app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=app), base_url=_LOCAL_BASE_URL
            )
        else:
            client = httpx.AsyncClient(base_url=self.server)
        async with client:
            response = await client.post(path, json=payload)
            try:
                body = response.json()
            except ValueError:
                body = {"detail": response.text}
            return response.status_code, body


def _data_options(command):
    for option in reversed(
        [
            click.option("--n", "n", type=int, help="Use the standard linear action on CP^n."),
            click.option(
                "--exponents",
                help="Comma-separated exponents a0,a1,... of a linear action on CP^n.",
            ),
            click.option(
                "--input",
                "input_path",
                type=click.Path(exists=True, dir_okay=False, path_type=Path),
                help="Read a fixed-point data document (JSON file).",
            ),
        ]
    ):
        command = option(command)
    return command


_format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
    help="Human-readable table or JSON.",
)


def _source_payload(n: int | None, exponents: str | None, input_path: Path | None) -> dict:
    provided = [value for value in (n, exponents, input_path) if value is not None]
    if len(provided) != 1:
        raise click.UsageError("exactly one of --n, --exponents, --input must be given")
    if n is not None:
        return {"n": n}
    if exponents is not None:
        try:
            values = [int(part) for part in exponents.split(",")]
        except ValueError:
            raise click.UsageError(
                f"--exponents must be a comma-separated integer list, got {exponents!r}"
            )
        return {"exponents": values}
    try:
        document = json.loads(input_path.read_text())
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"{input_path}: not valid JSON: {exc}")
    return {"data": document}


def _echo_json(body: dict) -> None:
    click.echo(json.dumps(body, indent=2))


def _render_table(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in [header, *rows]
    ]
    return "\n".join(lines)


def _fmt_optional(value: object) -> str:
    return "none" if value is None else str(value)


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


@click.group()
@click.version_option(version=__version__, prog_name="spinloc")
@click.option(
    "--server",
    metavar="URL",
    help="Base URL of a running spinloc service; by default the computation runs in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact A-hat localization series and spin obstruction for circle actions."""
    ctx.obj = ServiceClient(server)


@main.command()
@_data_options
@_format_option
@click.pass_obj
def weights(client: ServiceClient, n, exponents, input_path, output_format) -> None:
    """Show each fixed point's label, sign, weights, and total weight."""
    body = client.post("/weights", _source_payload(n, exponents, input_path))
    if output_format == "structured":
        _echo_json(body)
        return
    rows = [
        (
            point["label"],
            "+" if point["sign"] == 1 else "-",
            "[" + ", ".join(str(w) for w in point["weights"]) + "]",
            str(point["weight_sum"]),
        )
        for point in body["points"]
    ]
    click.echo(_render_table(("label", "sign", "weights", "sum"), rows))


@main.command()
@_data_options
@click.option("--order", type=int, help="Truncation order; defaults to 2*max(total weight)+1.")
@click.option("--dense", is_flag=True, help="Print every coefficient, including zeros.")
@_format_option
@click.pass_obj
def series(client: ServiceClient, n, exponents, input_path, order, dense, output_format) -> None:
    """Expand the equivariant A-hat localization series in s (s^2 = t)."""
    payload = _source_payload(n, exponents, input_path)
    if order is not None:
        if order < 0:
            raise click.UsageError("--order must be non-negative")
        payload["order"] = order
    body = client.post("/series", payload)
    if output_format == "structured":
        _echo_json(body)
        return
    click.echo(f"# order {body['order']}; the s^k coefficient is the t^(k/2) coefficient")
    entries = list(enumerate(body["coefficients"]))
    if not dense:
        entries = [(k, c) for k, c in entries if c != "0"]
    if not entries:
        click.echo("all coefficients are zero")
        return
    for k, c in entries:
        click.echo(f"s^{k}: {c}")


@main.command()
@_data_options
@_format_option
@click.pass_obj
def check(client: ServiceClient, n, exponents, input_path, output_format) -> None:
    """Run the weight-sum spin obstruction test."""
    body = client.post("/check", _source_payload(n, exponents, input_path))
    if output_format == "structured":
        _echo_json(body)
        return
    click.echo(f"verdict: {body['verdict']}")
    click.echo(f"witness: {_fmt_optional(body['witness'])}")
    click.echo(f"min total weight over sign +1 points: {_fmt_optional(body['min_sum_plus'])}")
    click.echo(f"min total weight over sign -1 points: {_fmt_optional(body['min_sum_minus'])}")
    click.echo(f"detail: {body['detail']}")


@main.command(name="cross-validate")
@click.option("--n", "n", type=int, required=True, help="Dimension parameter of CP^n.")
@click.option("--order", type=int, help="Truncation order; defaults to 2*max(total weight)+1.")
@_format_option
@click.pass_context
def cross_validate(ctx: click.Context, n, order, output_format) -> None:
    """Check that parity, series vanishing, and the obstruction verdict agree on CP^n.

    Exits with status 1 if the signals disagree."""
    payload: dict = {"n": n}
    if order is not None:
        if order < 0:
            raise click.UsageError("--order must be non-negative")
        payload["order"] = order
    body = ctx.obj.post("/cross-validate", payload)
    if output_format == "structured":
        _echo_json(body)
    else:
        click.echo(f"n: {body['n']}")
        click.echo(f"order: {body['order']}")
        click.echo(f"spin by parity: {_fmt_bool(body['spin_by_parity'])}")
        click.echo(f"series is zero: {_fmt_bool(body['series_is_zero'])}")
        lowest = body["lowest_term"]
        if lowest is None:
            click.echo("lowest term: none")
        else:
            click.echo(f"lowest term: s^{lowest['exponent']}: {lowest['coefficient']}")
        click.echo(f"obstruction verdict: {body['verdict']}")
        click.echo(f"witness: {_fmt_optional(body['witness'])}")
        click.echo(f"consistent: {_fmt_bool(body['consistent'])}")
        click.echo(f"detail: {body['detail']}")
    if not body["consistent"]:
        ctx.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True, help="Bind address.")
@click.option("--port", default=8000, show_default=True, type=int, help="Bind port.")
def serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("spinloc.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
