"""Command-line front end.

A thin client over the HTTP service: commands build JSON requests and render
responses.  By default the service runs in-process; --server points the same
commands at a remote instance.

Exit codes: 0 success, 2 parse error, 3 hypothesis violation, 4 flow
nonmonotonicity.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click
import httpx

EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_NONMONOTONE = 4


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app(), raise_server_exceptions=False)


def _load_set(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot read set file {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _post(client: httpx.Client, url: str, payload: dict) -> dict:
    resp = client.post(url, json=payload)
    if resp.status_code == 200:
        return resp.json()
    try:
        body = resp.json()
    except json.JSONDecodeError:
        body = {"error": "Unknown", "detail": resp.text}
    name = body.get("error")
    if name is None:
        # schema-validation failures surface as a bare "detail" list
        name = "ParseError"
    click.echo(f"error: {name}: {body.get('detail', '')}", err=True)
    if resp.status_code == 400 or name == "ParseError":
        sys.exit(EXIT_PARSE)
    sys.exit(EXIT_HYPOTHESIS)


def _emit(text: str, out: str | None):
    if out:
        directory = os.environ.get("ARCFLOW_OUTPUT_DIR")
        path = Path(directory) / out if directory else Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


@click.group()
@click.option("--server", default=None, help="URL of a running service; "
              "defaults to an in-process instance.")
@click.option("--seed", default=0, type=int, help="Seed for randomized runs.")
@click.option("--jobs", default=1, type=int, help="Worker hint for "
              "parallelizable commands.")
@click.pass_context
def main(ctx, server, seed, jobs):
    """Exact rearrangement computations on the circle."""
    ctx.ensure_object(dict)
    ctx.obj.update(server=server, seed=seed, jobs=jobs)


@main.command("eval")
@click.option("--a", "a_path", type=str, default=None)
@click.option("--b", "b_path", type=str, default=None)
@click.option("--c", "c_path", type=str, default=None)
@click.option("--tau", default=None)
@click.option("--eta", default=None)
@click.option("--star", default=None, help="Comma-separated a,b,c arc lengths.")
@click.pass_context
def cmd_eval(ctx, a_path, b_path, c_path, tau, eta, star):
    """Evaluate functionals on a pair or triple of sets."""
    with _client(ctx.obj["server"]) as client:
        if star is not None:
            parts = star.split(",")
            if len(parts) != 3:
                click.echo("error: --star expects three comma-separated lengths",
                           err=True)
                sys.exit(EXIT_PARSE)
            body = _post(client, "/eval/star",
                         {"a": parts[0], "b": parts[1], "c": parts[2]})
            click.echo(body["value"])
            return
        if not (a_path and b_path):
            click.echo("error: --a and --b are required without --star", err=True)
            sys.exit(EXIT_PARSE)
        payload = {"a": _load_set(a_path), "b": _load_set(b_path)}
        if c_path:
            payload["c"] = _load_set(c_path)
        if tau is not None:
            payload["tau"] = tau
        if eta is not None:
            payload["eta"] = eta
        body = _post(client, "/eval", payload)
        click.echo(json.dumps(body, indent=2))


@main.command("flow")
@click.option("--a", "a_path", required=True)
@click.option("--b", "b_path", required=True)
@click.option("--c", "c_path", required=True)
@click.option("--grid", default="geometric:1:terminal:50",
              help="geometric:START:STOP:POINTS; STOP may be 'terminal'.")
@click.option("--check", "check", type=click.Choice(["monotone"]), default=None)
@click.option("--out", default=None, help="Write CSV here instead of stdout.")
@click.pass_context
def cmd_flow(ctx, a_path, b_path, c_path, grid, check, out):
    """Trace the interval-growth flow of a triple as CSV."""
    parts = grid.split(":")
    if len(parts) != 4 or parts[0] != "geometric":
        click.echo("error: --grid must look like geometric:1:terminal:50", err=True)
        sys.exit(EXIT_PARSE)
    payload = {
        "a": _load_set(a_path), "b": _load_set(b_path), "c": _load_set(c_path),
        "check_monotone": check == "monotone",
    }
    try:
        points = int(parts[3])
    except ValueError:
        click.echo("error: grid point count must be an integer", err=True)
        sys.exit(EXIT_PARSE)
    with _client(ctx.obj["server"]) as client:
        if parts[1] == "1" and parts[2] == "terminal":
            payload["points"] = points
        else:
            from .circle_sets import set_from_json
            from .errors import ArcflowError
            from .flow import geometric_grid, terminal_scale
            from .rational import parse_rat, rat_str

            try:
                start = parse_rat(parts[1])
                if parts[2] == "terminal":
                    stop = min(terminal_scale(set_from_json(payload[k]))
                               for k in ("a", "b", "c"))
                else:
                    stop = parse_rat(parts[2])
                payload["grid"] = [rat_str(s) for s in
                                   geometric_grid(start, stop, points)]
            except ArcflowError as exc:
                click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
                sys.exit(EXIT_HYPOTHESIS)
        body = _post(client, "/flow", payload)
    _emit(body["csv"], out)
    if check == "monotone" and not body.get("monotone", True):
        v = body["violation"]
        click.echo(f"nonmonotone {v['field']} between rows {v['rows'][0]} "
                   f"and {v['rows'][1]}", err=True)
        sys.exit(EXIT_NONMONOTONE)


@main.command("certify")
@click.option("--a", "a_path", default=None)
@click.option("--b", "b_path", default=None)
@click.option("--c", "c_path", default=None)
@click.option("--eta", default="1/8")
@click.option("--n-max", default=8, type=int)
@click.option("--sweep", default=None, type=click.Choice(["delta"]),
              help="Run the perturbation-family sweep instead of one triple.")
@click.option("--out", default=None)
@click.pass_context
def cmd_certify(ctx, a_path, b_path, c_path, eta, n_max, sweep, out):
    """Produce a stability certificate, or a scaling sweep."""
    with _client(ctx.obj["server"]) as client:
        if sweep:
            body = _post(client, "/certify/sweep", {"n_max": n_max})
            lines = [json.dumps(row) for row in body["rows"]]
            lines.append(json.dumps({"slope": body["slope"]}))
            _emit("\n".join(lines), out)
            return
        if not (a_path and b_path and c_path):
            click.echo("error: --a, --b, --c are required without --sweep",
                       err=True)
            sys.exit(EXIT_PARSE)
        body = _post(client, "/certify", {
            "a": _load_set(a_path), "b": _load_set(b_path),
            "c": _load_set(c_path), "eta": eta, "n_max": n_max,
        })
        _emit(json.dumps(body, indent=2), out)


@main.command("oracle")
@click.option("--agree", default=None, type=int, metavar="N",
              help="Check continuum/discrete agreement at modulus N.")
@click.option("--search", default=None, nargs=2, type=str,
              metavar="N K1,K2,K3", help="Exhaustive/local extremizer search.")
@click.option("--objective", default="min_defect",
              type=click.Choice(["min_defect", "min_kneser"]))
@click.option("--a", "a_path", default=None)
@click.option("--b", "b_path", default=None)
@click.option("--c", "c_path", default=None)
@click.pass_context
def cmd_oracle(ctx, agree, search, objective, a_path, b_path, c_path):
    """Brute-force oracle runs on a finite cyclic group."""
    with _client(ctx.obj["server"]) as client:
        if agree is not None:
            if not (a_path and b_path and c_path):
                click.echo("error: --agree needs --a, --b, --c", err=True)
                sys.exit(EXIT_PARSE)
            body = _post(client, "/oracle/agree", {
                "a": _load_set(a_path), "b": _load_set(b_path),
                "c": _load_set(c_path), "n": agree,
            })
            click.echo(json.dumps(body, indent=2))
            return
        if search is not None:
            n_text, sizes_text = search
            try:
                n = int(n_text)
                sizes = [int(k) for k in sizes_text.split(",")]
                if len(sizes) != 3:
                    raise ValueError
            except ValueError:
                click.echo("error: --search expects N and K1,K2,K3", err=True)
                sys.exit(EXIT_PARSE)
            body = _post(client, "/oracle/search", {
                "n": n, "sizes": sizes, "objective": objective,
                "seed": ctx.obj["seed"],
            })
            click.echo(json.dumps(body, indent=2))
            return
        click.echo("error: one of --agree or --search is required", err=True)
        sys.exit(EXIT_PARSE)


if __name__ == "__main__":
    main()
