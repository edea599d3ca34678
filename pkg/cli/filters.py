import math

from common.schemas import FAILURE_INTERPRETATIONS, FailureReason


def sci(value: float | None, digits: int = 4) -> str:
    if value is None:
        return '-'
    return f'{value:.{digits}e}'


def fixed(value: float | None, digits: int = 4) -> str:
    if value is None:
        return '-'
    if math.isinf(value):
        return 'inf'
    return f'{value:.{digits}f}'


def verdict(passed: bool) -> str:
    return 'PASS' if passed else 'FAIL'


def interpret(reason: FailureReason | str) -> str:
    return FAILURE_INTERPRETATIONS[FailureReason(reason)]


ALL_FILTERS = (sci, fixed, verdict, interpret)
