"""
Atom model registry: which realization serves each atom kind.

Hook-shaped Weyl atoms can be switched to the Υ-cokernel model with the
SCHUREXT_HOOK_MODEL setting; every other Weyl shape uses the box model.
"""
from __future__ import annotations

from typing import Dict

from schurext.config import get_settings
from schurext.errors import PreconditionError
from schurext.polyfun.base import AtomModel
from schurext.polyfun.hook import HookWeylModel
from schurext.polyfun.onerow import DividedModel, ExteriorModel, SymmetricModel
from schurext.polyfun.weyl import WeylBoxModel

MODELS: Dict[str, AtomModel] = {
    "D": DividedModel(),
    "L": ExteriorModel(),
    "S": SymmetricModel(),
    "W": WeylBoxModel(),
    "W-hook": HookWeylModel(),
}

MODEL_DISPLAY_NAMES: Dict[str, str] = {
    "D": "divided power",
    "L": "exterior power",
    "S": "symmetric power",
    "W": "Weyl (box map)",
    "W-hook": "Weyl (hook presentation)",
}


def model_key(atom, hook_model: str | None = None) -> str:
    if atom.kind == "Schur":
        raise PreconditionError("Schur atoms are formal; rewrite with kuhn_dual first")
    if atom.kind == "W" and atom.shape.parts and atom.shape.is_hook:
        choice = hook_model or get_settings().hook_model
        if choice == "hook":
            return "W-hook"
    return atom.kind


def model_for(atom, hook_model: str | None = None) -> AtomModel:
    return MODELS[model_key(atom, hook_model)]
