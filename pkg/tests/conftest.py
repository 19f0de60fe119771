# Shared fixtures for the gkgrowth test suite
import os
import sys

import pytest

# Modules live at the repository root, next to main.py
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cuspidal import Explicit, GL2Case, LevelZero  # noqa: E402
from qring import XLaurent  # noqa: E402
from segments import CuspidalSymbol, Multisegment, Segment  # noqa: E402

PROBLEMS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "problems")


@pytest.fixture
def problem_path():
    def path(name):
        return os.path.join(PROBLEMS_DIR, name)
    return path


@pytest.fixture
def trivial_rho():
    """GL_1 character with G = 1"""
    return CuspidalSymbol("rho", 1, Explicit(1, XLaurent.const(1)))


@pytest.fixture
def gl2_rho():
    """Level zero supercuspidal of GL_2, G = (q+1)X - 2"""
    return CuspidalSymbol("rho", 2, GL2Case("level0"))


def seg(symbol, offset, length=1):
    return Segment(symbol, offset, length)


def ms(*segments):
    return Multisegment.of(segments)


def level_zero_symbol(sid, size):
    return CuspidalSymbol(sid, size, LevelZero(size))
