"""
polystab: exact normal stability of small 4-harmonic and ES-4-harmonic hyperspheres.

- Exact scalars and λ-polynomials over Q(√t) in `polystab.exact`
- The hypersphere, its tension ladder and the ES-4 correction in `polystab.geometry`
- Quadratic forms from three derivation routes in `polystab.forms`
- Normal index against the Laplace spectrum in `polystab.index`
- A floating point oracle in `polystab.oracle`

Environment variables are loaded via python-dotenv when available.
"""

from __future__ import annotations

# Best-effort .env loading
try:  # pragma: no cover - optional dependency
    from dotenv import load_dotenv  # type: ignore

    load_dotenv()
except Exception:  # pragma: no cover - be silent if dotenv is missing
    pass

from .core.enums import Adjudication, Energy, OutputFormat, Source, Suite
from .core.errors import PolystabError, ValidationError
from .forms import FormRegistry, QuadraticFormPoly, adjudicate, compare_routes
from .geometry import Hypersphere, SpaceForm, new_hypersphere, solve_proper_radius
from .index import IndexReport, index_sweep, normal_index
from .spectrum import SpectrumLevel, spectrum_iter, spectrum_levels

__all__ = [
    "Adjudication",
    "Energy",
    "FormRegistry",
    "Hypersphere",
    "IndexReport",
    "OutputFormat",
    "PolystabError",
    "QuadraticFormPoly",
    "Source",
    "SpaceForm",
    "SpectrumLevel",
    "Suite",
    "ValidationError",
    "adjudicate",
    "compare_routes",
    "index_sweep",
    "new_hypersphere",
    "normal_index",
    "solve_proper_radius",
    "spectrum_iter",
    "spectrum_levels",
]
