"""FastAPI service wrapping the core package.

Every endpoint is a pure computation on the request body; invalid setups are
rejected with a 400 whose detail names the violated invariant.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..cartan import CartanError, cartan_from_label, cartan_from_matrix
from ..minors import FullSections, psi_family
from ..monomial import l_matrix, monomial_matrix, prop414_closed_form, verify_monomial
from ..mpoly import MPoly
from ..shuffles import (
    SetupError,
    ShuffleSetup,
    Subexpression,
    enumerate_subexpressions,
    wy_convert,
)
from ..slgroup import SLModel
from ..verify import run_suite
from ..weyl import WeylGroup
from . import models

_GROUP_CACHE: dict[tuple, WeylGroup] = {}


def _group_for(cartan) -> WeylGroup:
    if isinstance(cartan, str):
        data = cartan_from_label(cartan)
    else:
        data = cartan_from_matrix(cartan)
    key = data.cartan
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = WeylGroup(data)
    return _GROUP_CACHE[key]


def _build_setup(params: models.SetupParams) -> ShuffleSetup:
    try:
        group = _group_for(params.cartan)
        return ShuffleSetup(
            group,
            u_word=tuple(params.u),
            v_word=tuple(params.v),
            eps=tuple(params.eps),
        )
    except (CartanError, SetupError, IndexError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _build_mask(setup: ShuffleSetup, mask: list[int]) -> Subexpression:
    try:
        return setup.subexpression(mask)
    except SetupError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _model_for(setup: ShuffleSetup) -> SLModel:
    try:
        return SLModel(setup.group)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _record(gamma: Subexpression) -> models.SubexpressionRecord:
    g = gamma.setup.group
    return models.SubexpressionRecord(
        mask=[1 if gamma.takes_letter(j) else 0 for j in range(1, gamma.setup.n + 1)],
        letters=list(gamma.letters()),
        gammas=[list(g.reduced_word(w)) for w in gamma.gamma_powers],
        J=sorted(gamma.J),
        I=sorted(gamma.I),
        K=sorted(gamma.K),
        dim=gamma.dim,
        positive=gamma.is_positive,
        distinguished=gamma.is_distinguished,
        w=list(g.reduced_word(gamma.endpoint)),
        nu=[list(w.coords) for w in gamma.nu],
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="bscells",
        description=(
            "Exact cell decompositions of double Bott-Samelson varieties: "
            "shuffled subexpressions, chart coordinates and generalized-minor "
            "functions over SL(n, Q)."
        ),
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/enumerate", response_model=models.EnumerateResponse)
    def enumerate_masks(req: models.EnumerateRequest) -> models.EnumerateResponse:
        setup = _build_setup(req)
        fixed = None
        if req.fixed_w is not None:
            try:
                fixed = setup.group.from_word(req.fixed_w)
            except IndexError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        try:
            subs = list(
                enumerate_subexpressions(setup, req.filter, fixed_w=fixed, max_bits=req.max_bits)
            )
        except SetupError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        records = [_record(s) for s in subs]
        by_endpoint: dict[str, int] = {}
        for s in subs:
            key = ",".join(map(str, setup.group.reduced_word(s.endpoint))) or "e"
            by_endpoint[key] = by_endpoint.get(key, 0) + 1
        summary = models.EnumerateSummary(
            total=len(subs),
            positive=sum(1 for s in subs if s.is_positive),
            distinguished=sum(1 for s in subs if s.is_distinguished),
            by_endpoint=by_endpoint,
        )
        return models.EnumerateResponse(n=setup.n, records=records, summary=summary)

    @app.post("/psi", response_model=models.PsiResponse)
    def psi(req: models.MaskRequest) -> models.PsiResponse:
        setup = _build_setup(req)
        gamma = _build_mask(setup, req.mask)
        model = _model_for(setup)
        try:
            family = psi_family(model, gamma)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        items = [
            models.PsiItem(
                j=j,
                psi=str(family.psi[j - 1]),
                L=str(family.L[j - 1]),
                M=str(family.M[j - 1]),
            )
            for j in range(1, setup.n + 1)
        ]
        return models.PsiResponse(
            mask=req.mask,
            J=sorted(gamma.J),
            I=sorted(gamma.I),
            K=sorted(gamma.K),
            items=items,
        )

    @app.post("/sections", response_model=models.SectionsResponse)
    def sections(req: models.MaskRequest) -> models.SectionsResponse:
        setup = _build_setup(req)
        gamma = _build_mask(setup, req.mask)
        model = _model_for(setup)
        out = []
        for j in range(1, setup.n + 1):
            p, q = model.section_pq(gamma, j, MPoly.variable(setup.n, j))
            out.append(
                models.SectionItem(
                    j=j,
                    p=[[str(p.entry(r, c)) for c in range(model.m)] for r in range(model.m)],
                    q=[[str(q.entry(r, c)) for c in range(model.m)] for r in range(model.m)],
                )
            )
        return models.SectionsResponse(mask=req.mask, sections=out)

    @app.post("/mono", response_model=models.MonoResponse)
    def mono(req: models.MonoRequest) -> models.MonoResponse:
        setup = _build_setup(req)
        gamma = _build_mask(setup, req.mask)
        model = _model_for(setup)
        try:
            matrix = monomial_matrix(gamma)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        inverse = l_matrix(matrix)
        mismatches: list[str] = []
        applicable = not setup.v_word
        if applicable:
            for a, j in enumerate(matrix.indices):
                for k in matrix.indices[:a]:
                    closed = prop414_closed_form(gamma, k, j)
                    if closed != inverse.entry(j, k):
                        mismatches.append(
                            f"(k={k}, j={j}): closed form {closed} != inverse {inverse.entry(j, k)}"
                        )
        sections_cache = FullSections(model, setup)
        report = verify_monomial(
            model, gamma, samples=req.samples, seed=req.seed, sections=sections_cache
        )
        failures = [
            models.SampleReport(
                xi=[str(x) for x in s.xi],
                z=[str(x) for x in s.z],
                per_position=s.per_position,
            )
            for s in report.samples
            if not s.passed
        ]
        return models.MonoResponse(
            mask=req.mask,
            index_set=list(matrix.indices),
            M=[list(r) for r in matrix.entries],
            L=[list(r) for r in inverse.entries],
            closed_form=models.ClosedFormReport(
                applicable=applicable, matches=not mismatches, mismatches=mismatches
            ),
            verified_samples=len(report.samples),
            resamples=report.resamples,
            passed=report.passed and not mismatches,
            failures=failures,
        )

    @app.post("/convert-wy", response_model=models.ConvertWyResponse)
    def convert_wy(req: models.ConvertWyRequest) -> models.ConvertWyResponse:
        setup = _build_setup(req)
        gamma = _build_mask(setup, req.mask)
        try:
            rec = wy_convert(gamma, allow_unreduced=req.allow_unreduced)
        except SetupError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        g = setup.group
        return models.ConvertWyResponse(
            J0=sorted(rec.J0),
            Jplus=sorted(rec.Jplus),
            Jminus=sorted(rec.Jminus),
            w_sequence=[list(g.reduced_word(w)) for w in rec.w_sequence],
        )

    @app.post("/verify", response_model=models.VerifyResponse)
    def verify(req: models.VerifyRequest) -> models.VerifyResponse:
        results = run_suite(req.suite, seed=req.seed, golden_dir=req.golden_dir)
        checks = [models.CheckReport(**r.as_dict()) for r in results]
        return models.VerifyResponse(passed=all(r.passed for r in results), checks=checks)

    return app


app = create_app()
