"""Algebra endpoints: structure, normal forms, actions and verification."""

from typing import List

from fastapi import APIRouter, Depends, HTTPException

from frobnil.algebra.frobenius import FrobeniusSuperalgebra
from frobnil.dependencies import get_algebra_repository, get_verification_service
from frobnil.exceptions import FrobnilError, IllegalSymbolForTarget, ParseError, UnknownAlgebra
from frobnil.models import (
    ActRequest, AlgebraSummary, DegreeResponse, ElementResponse, NormalizeRequest,
    ObjectResponse, VerificationReport, VerifyRequest,
)
from frobnil.repositories.base import AlgebraRepository
from frobnil.services import operations
from frobnil.services.verification import VerificationService
from frobnil.textio.evaluator import Target
from frobnil.textio.printer import print_element

router = APIRouter(prefix="/algebras", tags=["algebras"])


def http_error(e: FrobnilError) -> HTTPException:
    """404 for unknown algebras, 422 for unreadable input, 400 otherwise."""
    if isinstance(e, UnknownAlgebra):
        return HTTPException(status_code=404, detail=str(e))
    if isinstance(e, (ParseError, IllegalSymbolForTarget)):
        return HTTPException(status_code=422, detail=str(e))
    return HTTPException(status_code=400, detail=str(e))


def _lookup(name: str, repository: AlgebraRepository) -> FrobeniusSuperalgebra:
    try:
        return repository.get_by_name(name)
    except FrobnilError as e:
        raise http_error(e)


def summarize(A: FrobeniusSuperalgebra) -> AlgebraSummary:
    return AlgebraSummary(
        name=A.name,
        dim=A.dim,
        labels=list(A.labels),
        parities=[A.parity(i) for i in range(A.dim)],
        unit=A.labels[A.unit],
        trace_parity=A.p,
        symmetric=A.symmetric,
        commutative=A.is_commutative(),
        supercommutative=A.is_supercommutative(),
        graded=A.is_graded,
        validation=A.report,
    )


@router.get("", response_model=List[AlgebraSummary])
def get_all_algebras(repository: AlgebraRepository = Depends(get_algebra_repository)):
    """Built-in and configured algebras."""
    return [summarize(A) for A in repository.get_all()]


@router.get("/{name}", response_model=AlgebraSummary)
def get_algebra(name: str, repository: AlgebraRepository = Depends(get_algebra_repository)):
    return summarize(_lookup(name, repository))


@router.get("/{name}/dual-basis", response_model=ObjectResponse)
def get_dual_basis(name: str, repository: AlgebraRepository = Depends(get_algebra_repository)):
    A = _lookup(name, repository)
    try:
        values = operations.dual_basis_lines(A)
    except FrobnilError as e:
        raise http_error(e)
    return ObjectResponse(algebra=A.name, object="dual-basis", values=values)


@router.get("/{name}/tau", response_model=ObjectResponse)
def get_tau(name: str, repository: AlgebraRepository = Depends(get_algebra_repository)):
    """tau, or both teleporters when the algebra is not symmetric."""
    A = _lookup(name, repository)
    try:
        values = operations.tau_lines(A)
    except FrobnilError as e:
        raise http_error(e)
    return ObjectResponse(algebra=A.name, object="tau", values=values)


@router.get("/{name}/nakayama", response_model=ObjectResponse)
def get_nakayama(name: str, repository: AlgebraRepository = Depends(get_algebra_repository)):
    A = _lookup(name, repository)
    try:
        values = operations.nakayama_lines(A)
    except FrobnilError as e:
        raise http_error(e)
    return ObjectResponse(algebra=A.name, object="nakayama", values=values)


@router.post("/{name}/normalize", response_model=ElementResponse)
def normalize_expression(name: str, request: NormalizeRequest,
                         repository: AlgebraRepository = Depends(get_algebra_repository)):
    """Normal form of an expression in the requested target algebra."""
    A = _lookup(name, repository)
    try:
        target = Target(request.target)
    except ValueError:
        raise HTTPException(status_code=422, detail=f"unknown target {request.target!r}")
    try:
        result, _ = operations.normalize_expression(A, request.n, request.expr, target)
    except FrobnilError as e:
        raise http_error(e)
    return ElementResponse(
        algebra=A.name, n=request.n, target=target.value,
        result=print_element(result, A), terms=len(result),
    )


@router.post("/{name}/act", response_model=ElementResponse)
def act_on_polynomial(name: str, request: ActRequest,
                      repository: AlgebraRepository = Depends(get_algebra_repository)):
    A = _lookup(name, repository)
    try:
        result = operations.act_expression(A, request.n, request.expr, request.on)
    except FrobnilError as e:
        raise http_error(e)
    return ElementResponse(
        algebra=A.name, n=request.n, target=Target.POLYNOMIAL.value,
        result=print_element(result, A), terms=len(result),
    )


@router.post("/{name}/grade", response_model=DegreeResponse)
def grade_expression(name: str, request: NormalizeRequest,
                     repository: AlgebraRepository = Depends(get_algebra_repository)):
    """Degree and parity of each term of a nilHecke normal form."""
    A = _lookup(name, repository)
    try:
        terms = operations.graded_terms(A, request.n, request.expr)
    except FrobnilError as e:
        raise http_error(e)
    return DegreeResponse(algebra=A.name, n=request.n, terms=terms)


@router.post("/{name}/verify", response_model=VerificationReport)
async def verify_algebra(
    name: str,
    request: VerifyRequest,
    repository: AlgebraRepository = Depends(get_algebra_repository),
    verification_service: VerificationService = Depends(get_verification_service),
):
    """Run every applicable suite; reports are cached in Redis when available."""
    A = _lookup(name, repository)
    try:
        return await verification_service.verify(A, request.n, request.seed, request.degree_cap)
    except FrobnilError as e:
        raise http_error(e)
