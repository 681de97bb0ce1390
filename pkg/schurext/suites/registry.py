"""
Suite registry: `verify --suite KEY` looks keys up here; "all" runs them in order.
"""
from __future__ import annotations

from typing import Dict

from schurext.suites.base import Suite
from schurext.suites.blocks import BlocksSuite
from schurext.suites.bounds import BoundsSuite
from schurext.suites.duality import DualitySuite
from schurext.suites.invariance import InvarianceSuite
from schurext.suites.periodicity import PeriodicitySuite
from schurext.suites.resolutions import ResolutionsSuite
from schurext.suites.series import SeriesSuite
from schurext.suites.simplicial import SimplicialSuite
from schurext.suites.structure import StructureSuite
from schurext.suites.twisted import TwistedSuite

SUITES: Dict[str, Suite] = {
    "invariance": InvarianceSuite(),
    "duality": DualitySuite(),
    "periodicity": PeriodicitySuite(),
    "twisted": TwistedSuite(),
    "blocks": BlocksSuite(),
    "simplicial": SimplicialSuite(),
    "bounds": BoundsSuite(),
    "structure": StructureSuite(),
    "series": SeriesSuite(),
    "resolutions": ResolutionsSuite(),
}

SUITE_DISPLAY_NAMES: Dict[str, str] = {
    "invariance": "Hook invariance",
    "duality": "Two-column duality",
    "periodicity": "Periodicity",
    "twisted": "Twisted Koszul",
    "blocks": "GL2 blocks",
    "simplicial": "Cosimplicial identities",
    "bounds": "Vanishing ranges",
    "structure": "Complex structure",
    "series": "Ext series",
    "resolutions": "Resolution shapes",
}
