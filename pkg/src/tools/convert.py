# /src/tools/convert.py

from core.autarky import Autarky
from core.cnf import assignment_literals, sorted_literals
from schemas.autarky import AutarkyResult


def autarky_result(autarky: Autarky) -> AutarkyResult:
    return AutarkyResult(
        autarky=assignment_literals(autarky.assignment),
        touched=[sorted_literals(c) for c in autarky.touched],
    )
