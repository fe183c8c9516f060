"""HTTP service exposing the exact circle-set computations.

All numeric payloads are exact "p/q" strings; decimal columns in flow CSVs
are labeled approximations of the exact values.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import bohr, flow, functionals, oracle_zn
from ..circle_sets import IntervalSet, set_from_json, sumset0
from ..errors import ArcflowError, RangeError
from ..rational import ONE, Q, ZERO, parse_rat, rat_float, rat_str
from . import schemas


class ParseFailure(Exception):
    def __init__(self, detail: str):
        self.detail = detail


def _parse_set(model: schemas.SetModel) -> IntervalSet:
    try:
        return set_from_json(model.model_dump())
    except (ArcflowError, ValueError, TypeError) as exc:
        raise ParseFailure(f"bad set payload: {exc}") from exc


def _parse_rat(text: str, label: str):
    try:
        return parse_rat(text)
    except (ArcflowError, ValueError) as exc:
        raise ParseFailure(f"bad rational for {label}: {text!r}") from exc


def create_app() -> FastAPI:
    app = FastAPI(title="arcflow", version="0.1.0")

    @app.exception_handler(ParseFailure)
    async def parse_failure_handler(request: Request, exc: ParseFailure):
        return JSONResponse(
            status_code=400,
            content={"error": "ParseError", "detail": exc.detail},
        )

    @app.exception_handler(ArcflowError)
    async def domain_error_handler(request: Request, exc: ArcflowError):
        return JSONResponse(
            status_code=422,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/eval", response_model=schemas.EvalResponse,
              response_model_exclude_none=True)
    def evaluate(req: schemas.EvalRequest):
        a = _parse_set(req.a)
        b = _parse_set(req.b)
        out = {
            "measures": {"a": rat_str(a.measure), "b": rat_str(b.measure)},
            "kneser_defect": rat_str(functionals.kneser_defect(a, b)),
        }
        if req.tau is not None:
            tau = _parse_rat(req.tau, "tau")
            out["defect_truncated"] = rat_str(functionals.defect_Dprime(a, b, tau))
        if req.c is not None:
            c = _parse_set(req.c)
            out["measures"]["c"] = rat_str(c.measure)
            out["triple"] = rat_str(functionals.triple_functional(a, b, c))
            out["defect"] = rat_str(functionals.defect_D(a, b, c))
            out["tau_matching"] = rat_str(
                functionals.tau_C(a.measure, b.measure, c.measure))
            report = functionals.admissibility(
                a.measure, b.measure, c.measure,
                _parse_rat(req.eta, "eta") if req.eta is not None else None)
            out["admissibility"] = report.to_json()
            if req.eta is not None:
                out["admissibility"]["eta_bounded"] = report.eta_bounded_at(
                    _parse_rat(req.eta, "eta"))
        return out

    @app.post("/eval/star", response_model=schemas.StarResponse)
    def star(req: schemas.StarRequest):
        value = functionals.rs_star_value(
            _parse_rat(req.a, "a"), _parse_rat(req.b, "b"), _parse_rat(req.c, "c"))
        return {"value": rat_str(value)}

    @app.post("/flow", response_model=schemas.FlowResponse,
              response_model_exclude_none=True)
    def flow_trace(req: schemas.FlowRequest):
        e1, e2, e3 = _parse_set(req.a), _parse_set(req.b), _parse_set(req.c)
        if req.grid is not None:
            grid = [_parse_rat(s, "grid") for s in req.grid]
        else:
            stop = min(flow.terminal_scale(e)
                       for e in (e1, e2, e3))
            grid = flow.geometric_grid(ONE, stop, req.points)
        rows, window = flow.flow_trace(e1, e2, e3, grid)
        out = {"csv": flow.trace_to_csv(rows), "window": window}
        if req.check_monotone:
            violation = None
            for i in range(1, len(rows)):
                if i < window and rows[i].T_norm < rows[i - 1].T_norm:
                    violation = {"field": "T_norm", "rows": [i - 1, i]}
                    break
                if rows[i].sum_norm > rows[i - 1].sum_norm:
                    violation = {"field": "sum_norm", "rows": [i - 1, i]}
                    break
            out["monotone"] = violation is None
            if violation is not None:
                out["violation"] = violation
        return out

    @app.post("/certify")
    def certify(req: schemas.CertifyRequest):
        a, b, c = _parse_set(req.a), _parse_set(req.b), _parse_set(req.c)
        cert = bohr.stability_certificate(
            a, b, c, _parse_rat(req.eta, "eta"), n_max=req.n_max)
        return cert.to_json()

    @app.post("/certify/sweep", response_model=schemas.SweepResponse)
    def certify_sweep(req: schemas.SweepRequest):
        rows = []
        logs = []
        import math

        for k in req.exponents:
            delta = Q(1, 2**k)
            a, b, c = bohr.perturbed_bohr_triple(delta)
            defect = functionals.defect_D(a, b, c)
            rec = bohr.recover_triple(a, b, c, n_max=req.n_max)
            rows.append({
                "delta": rat_str(delta),
                "defect": rat_str(defect),
                "max_symdiff": rat_str(max(rec.distances)),
            })
            logs.append((math.log(rat_float(delta)), math.log(rat_float(defect))))
        n = len(logs)
        mx = sum(x for x, _ in logs) / n
        my = sum(y for _, y in logs) / n
        slope = (sum((x - mx) * (y - my) for x, y in logs)
                 / sum((x - mx) ** 2 for x, _ in logs))
        return {"rows": rows, "slope": slope}

    @app.post("/oracle/agree", response_model=schemas.AgreeResponse)
    def oracle_agree(req: schemas.AgreeRequest):
        a, b, c = _parse_set(req.a), _parse_set(req.b), _parse_set(req.c)
        continuum, discrete, gap = oracle_zn.agreement_check(a, b, c, req.n)
        return {
            "continuum": rat_str(continuum),
            "discrete": rat_str(discrete),
            "gap": rat_str(gap),
            "bound": rat_str(oracle_zn.agreement_bound(a, b, c, req.n)),
        }

    @app.post("/oracle/search", response_model=schemas.SearchResponse)
    def oracle_search(req: schemas.SearchRequest):
        result = oracle_zn.exhaustive_search(
            req.n, req.sizes, req.objective, seed=req.seed)
        payload = result.to_json()
        payload["value"] = str(payload["value"])
        return payload

    return app


app = create_app()
