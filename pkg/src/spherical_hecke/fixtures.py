"""Loaders for the golden JSON fixtures shipped with the package.

The files are produced by ``scripts/build_fixtures.py`` from hand
transcriptions and are independent of the formula engine.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .coeffs import RatFuncP
from .emit import hecke_from_json, mpoly_from_json, rf_from_json, series_from_json
from .hecke_expr import HeckePoly
from .multipoly import MPoly
from .series import XSeries

__all__ = [
    "load_json", "load_gl3_table", "load_generator_images", "load_P3", "load_omega_F",
    "load_E3", "load_F3", "load_K_constants", "load_nu_expansion",
]


@lru_cache(maxsize=None)
def load_json(name: str):
    text = resources.files("spherical_hecke").joinpath("fixtures", name).read_text()
    return json.loads(text)


def load_gl3_table() -> dict[tuple[int, int], MPoly]:
    """(lambda, mu) -> omega(t(1, p^lambda, p^mu))."""
    return {(e["lambda"], e["mu"]): mpoly_from_json(e["poly"], 3)
            for e in load_json("omega_gl3_table.json")["entries"]}


def load_generator_images() -> dict[str, MPoly]:
    return {k: mpoly_from_json(v, 3) for k, v in load_json("generator_images.json")["images"].items()}


def load_P3() -> XSeries:
    return series_from_json(load_json("P3_numerator.json")["series"])


def load_omega_F() -> XSeries:
    return series_from_json(load_json("omega_F.json")["series"])


def load_E3() -> HeckePoly:
    return hecke_from_json(load_json("E3.json")["hecke"])


def load_F3() -> HeckePoly:
    return hecke_from_json(load_json("F3.json")["hecke"])


def load_K_constants() -> dict[str, RatFuncP]:
    return {k: rf_from_json(v) for k, v in load_json("K_constants.json")["values"].items()}


def load_nu_expansion() -> list[RatFuncP]:
    return [rf_from_json(c) for c in load_json("nu_expansion.json")["coeffs"]]
