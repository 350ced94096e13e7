from decimal import Decimal, getcontext

import pytest
from hypothesis import settings

from sturmab.exact import QuadraticNumber

settings.register_profile("default", deadline=None)
settings.load_profile("default")

getcontext().prec = 80


def to_decimal(x: QuadraticNumber) -> Decimal:
    """High-precision decimal value, used as an ordering oracle."""
    return (Decimal(x.p) + Decimal(x.q) * Decimal(x.d).sqrt()) / Decimal(x.r)


@pytest.fixture
def dec():
    return to_decimal
